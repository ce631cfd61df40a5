#include "soscert/rational.hpp"

namespace soscert {

Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational pow_rational(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    // base was canonical, so num^e / den^e already is.
    return r;
}

Rational pow2_rational(long e) {
    Rational r(1);
    if (e >= 0) {
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
    } else {
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(-e));
    }
    return r;
}

long ceil_log2(const Rational& q) {
    if (q <= 0) throw std::invalid_argument("ceil_log2 needs a positive argument");
    // Smallest t with 2^t >= q. Start from a bit-length estimate and adjust.
    long t = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2)) + 1;
    while (pow2_rational(t) < q) ++t;
    while (pow2_rational(t - 1) >= q) --t;
    return t;
}

Integer ceil_sqrt_ratio(const Integer& num, const Integer& den) {
    if (num < 0 || den <= 0) throw std::invalid_argument("ceil_sqrt_ratio domain");
    if (num == 0) return 0;
    // floor sqrt of num/den, then adjust.
    Integer q = num / den;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), q.get_mpz_t());
    while (r * r * den >= num) --r;
    while (r * r * den < num) ++r;
    return r;
}

Rational round_dyadic(const Rational& q, unsigned bits, int dir) {
    if (dir == 0) throw std::invalid_argument("round_dyadic needs a direction");
    Integer scaled_num = q.get_num() << bits;
    Integer m;
    if (dir > 0) {
        mpz_cdiv_q(m.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den_mpz_t());
    } else {
        mpz_fdiv_q(m.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den_mpz_t());
    }
    Rational r(m, Integer(1) << bits);
    r.canonicalize();
    return r;
}

}  // namespace soscert
