#include "soscert/enclosures.hpp"

#include <stdexcept>

namespace soscert {

namespace {

IntervalQ outward(const Rational& lo, const Rational& hi, unsigned bits) {
    return IntervalQ(round_dyadic(lo, bits + 4, -1), round_dyadic(hi, bits + 4, +1));
}

// arctan(1/m) for integer m >= 2 by the alternating series; consecutive
// partial sums bracket the value.
IntervalQ arctan_inv(long m, unsigned bits) {
    Rational inv(1, m);
    Rational inv2 = inv * inv;
    Rational term = inv;
    Rational sum = term;
    Rational prev_sum = sum;
    unsigned long k = 0;
    Rational tol = pow2_rational(-static_cast<long>(bits) - 8);
    while (abs_rational(term) > tol) {
        prev_sum = sum;
        ++k;
        term = -term * inv2;
        sum += term / Rational(static_cast<long>(2 * k + 1));
    }
    Rational lo = std::min(sum, prev_sum);
    Rational hi = std::max(sum, prev_sum);
    return IntervalQ(lo, hi);
}

}  // namespace

IntervalQ pi_enclosure(unsigned bits) {
    // Machin: pi = 16*arctan(1/5) - 4*arctan(1/239)
    IntervalQ a5 = arctan_inv(5, bits + 8);
    IntervalQ a239 = arctan_inv(239, bits + 8);
    Rational lo = Rational(16) * a5.lo - Rational(4) * a239.hi;
    Rational hi = Rational(16) * a5.hi - Rational(4) * a239.lo;
    return outward(lo, hi, bits);
}

IntervalQ sqrt_enclosure(const Rational& x, unsigned bits) {
    if (x < 0) throw std::invalid_argument("sqrt of a negative rational");
    if (x == 0) return IntervalQ(Rational(0), Rational(0));
    // floor(sqrt(num * den * 4^B)) / (den * 2^B) <= sqrt(x)
    Integer scaled = x.get_num() * x.get_den();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2UL * bits);
    Integer root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    Integer den = x.get_den();
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    Rational lo = make_rational(root, den);
    Rational hi = make_rational(root + 1, den);
    // lo^2 <= x <= hi^2 by construction of the integer sqrt.
    return IntervalQ(lo, hi);
}

namespace {

// e^x for 0 <= x <= 1 by Taylor with an explicit tail bound.
IntervalQ exp_unit(const Rational& x, unsigned bits) {
    Rational term(1);
    Rational sum(1);
    unsigned long k = 0;
    Rational tol = pow2_rational(-static_cast<long>(bits) - 8);
    while (term > tol) {
        ++k;
        term = term * x / Rational(static_cast<long>(k));
        sum += term;
    }
    // Remaining tail <= 2*term for x <= 1, k >= 1.
    return IntervalQ(sum, sum + term * 2);
}

}  // namespace

IntervalQ exp_enclosure(const Rational& x, unsigned bits) {
    if (x < 0) {
        IntervalQ pos = exp_enclosure(Rational(-x), bits + 8);
        return outward(Rational(1) / pos.hi, Rational(1) / pos.lo, bits);
    }
    // Range-reduce: e^x = (e^{x/2^k})^{2^k} with x/2^k <= 1.
    long k = 0;
    Rational r = x;
    while (r > 1) {
        r /= 2;
        ++k;
    }
    IntervalQ e = exp_unit(r, bits + static_cast<unsigned>(2 * k) + 8);
    Rational lo = e.lo, hi = e.hi;
    for (long i = 0; i < k; ++i) {
        lo = lo * lo;
        hi = hi * hi;
        lo = round_dyadic(lo, bits + 16, -1);
        hi = round_dyadic(hi, bits + 16, +1);
        if (lo < 0) lo = 0;
    }
    return outward(lo, hi, bits);
}

IntervalQ exp_enclosure(const IntervalQ& x, unsigned bits) {
    return IntervalQ(exp_enclosure(x.lo, bits).lo, exp_enclosure(x.hi, bits).hi);
}

IntervalQ ln_enclosure(const Rational& x, unsigned bits) {
    if (x <= 0) throw std::invalid_argument("ln of a nonpositive rational");
    if (x == 1) return IntervalQ(Rational(0), Rational(0));
    // Reduce to m in [3/4, 3/2) times a power of two.
    long k = 0;
    Rational m = x;
    while (m >= Rational(3, 2)) {
        m /= 2;
        ++k;
    }
    while (m < Rational(3, 4)) {
        m *= 2;
        --k;
    }
    // ln m = 2 atanh(z), z = (m-1)/(m+1), |z| <= 1/5
    Rational z = (m - 1) / (m + 1);
    Rational z2 = z * z;
    Rational term = z;
    Rational sum = z;
    unsigned long j = 0;
    Rational tol = pow2_rational(-static_cast<long>(bits) - 10);
    while (abs_rational(term) > tol) {
        ++j;
        term = term * z2;
        sum += term / Rational(static_cast<long>(2 * j + 1));
    }
    // Tail bounded by |term| (geometric with ratio z2 <= 1/25).
    Rational lnm_lo = 2 * (sum - abs_rational(term));
    Rational lnm_hi = 2 * (sum + abs_rational(term));
    // ln 2 = 2 atanh(1/3), fixed high-precision bracket.
    static const IntervalQ ln2 = [] {
        Rational z13(1, 3);
        Rational z2v = z13 * z13;
        Rational t = z13, s = z13;
        for (int j2 = 1; j2 <= 160; ++j2) {
            t = t * z2v;
            s += t / Rational(2 * j2 + 1);
        }
        return IntervalQ(2 * (s - t), 2 * (s + t));
    }();
    Rational lo, hi;
    if (k >= 0) {
        lo = lnm_lo + Rational(k) * ln2.lo;
        hi = lnm_hi + Rational(k) * ln2.hi;
    } else {
        lo = lnm_lo + Rational(k) * ln2.hi;
        hi = lnm_hi + Rational(k) * ln2.lo;
    }
    return outward(lo, hi, bits);
}

IntervalQ log2_enclosure(const Rational& x, unsigned bits) {
    IntervalQ lnx = ln_enclosure(x, bits + 8);
    IntervalQ ln2 = ln_enclosure(Rational(2), bits + 8);
    Rational lo = (lnx.lo >= 0) ? lnx.lo / ln2.hi : lnx.lo / ln2.lo;
    Rational hi = (lnx.hi >= 0) ? lnx.hi / ln2.lo : lnx.hi / ln2.hi;
    return outward(lo, hi, bits);
}

long ceil_log2_exact(const Rational& x) { return ceil_log2(x); }

long ceil_sqrt_exact(long num, long den) {
    Integer r = ceil_sqrt_ratio(Integer(num), Integer(den));
    return static_cast<long>(r.get_si());
}

Integer ceil_of_enclosed(const IntervalQ& enc) {
    Integer clo = ceil_rational(enc.lo);
    Integer chi = ceil_rational(enc.hi);
    if (clo != chi) throw std::runtime_error("enclosure too wide to round; raise precision");
    return clo;
}

Rational upper_e_8_sqrt3(unsigned bits) {
    IntervalQ s3 = sqrt_enclosure(Rational(3), bits + 8);
    IntervalQ e = exp_enclosure(Rational(8) * s3.hi, bits);
    return e.hi;
}

int compare_against_sqrt(const Rational& x, const Rational& y, const Rational& u) {
    if (y < 0 || u < 0) throw std::invalid_argument("compare_against_sqrt needs y, u >= 0");
    // sign of x - y*sqrt(u)
    if (u == 0 || y == 0) return sign(x);
    if (x <= 0) return -1;  // y*sqrt(u) > 0 here
    Rational lhs = x * x;
    Rational rhs = y * y * u;
    if (lhs > rhs) return 1;
    if (lhs < rhs) return -1;
    return 0;
}

void expand_binomial_sqrt(const Rational& s, const Rational& u, unsigned long e, Rational& A, Rational& B) {
    // (1 + s*sqrt(u))^e = A + B*sqrt(u): iterate (A + B sqrt u)(1 + s sqrt u).
    A = 1;
    B = 0;
    for (unsigned long i = 0; i < e; ++i) {
        Rational nA = A + B * s * u;
        Rational nB = A * s + B;
        A = std::move(nA);
        B = std::move(nB);
    }
}

}  // namespace soscert
