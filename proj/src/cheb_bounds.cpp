#include "soscert/cheb_bounds.hpp"

#include <stdexcept>

#include "soscert/enclosures.hpp"

namespace soscert {

Rational chebyshev_T_value(unsigned d, const Rational& y) {
    if (d == 0) return Rational(1);
    Rational prev(1), cur(y);
    Rational two_y = 2 * y;
    for (unsigned i = 2; i <= d; ++i) {
        Rational next = two_y * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational chebyshev_U_value(unsigned d, const Rational& y) {
    if (d == 0) return Rational(1);
    Rational prev(1), cur(2 * y);
    Rational two_y = 2 * y;
    for (unsigned i = 2; i <= d; ++i) {
        Rational next = two_y * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

GrowthBoundCheck verify_growth_bounds(long n, long d, const Rational& c) {
    if (n < 1 || d < 1) throw std::invalid_argument("verify_growth_bounds: n, d >= 1");
    if (c < 0) throw std::invalid_argument("verify_growth_bounds: c >= 0");
    GrowthBoundCheck out;
    out.n = n;
    out.d = d;
    out.c = c;
    Rational y = Rational(-1) - c / Rational(n);
    Rational t = chebyshev_T_value(static_cast<unsigned>(d), y);
    out.lhs = t * t;
    const unsigned long e = static_cast<unsigned long>(2 * d);

    if (c <= n) {
        out.case_id = 1;
        if (d > n) throw std::invalid_argument("growth case 1 needs d <= n");
        Rational u = Rational(2) * c / Rational(n);
        Rational A, B;
        // lower: 4*lhs >= (1+sqrt u)^{2d} = A + B sqrt u
        expand_binomial_sqrt(Rational(1), u, e, A, B);
        out.lower_ok = compare_against_sqrt(Rational(4) * out.lhs - A, B, u) >= 0;
        // upper: lhs <= (1+2 sqrt u)^{2d} = A' + B' sqrt u
        Rational A2, B2;
        expand_binomial_sqrt(Rational(2), u, e, A2, B2);
        out.upper_ok = compare_against_sqrt(out.lhs - A2, B2, u) <= 0;
        // refinement: lhs <= (1+sqrt v)^{2d}, v = (2c+1)/n
        Rational v = (Rational(2) * c + 1) / Rational(n);
        Rational A3, B3;
        expand_binomial_sqrt(Rational(1), v, e, A3, B3);
        out.refinement_ok = compare_against_sqrt(out.lhs - A3, B3, v) <= 0;
    } else {
        out.case_id = 2;
        Rational bound = pow_rational(Rational(1) + Rational(3) * c / Rational(n), e);
        out.case2_upper_ok = out.lhs <= bound;
    }
    return out;
}

SmallestRootResult smallest_root_scaled(long d, long n, unsigned precision_bits) {
    if (d < 1 || n < 1) throw std::invalid_argument("smallest_root_scaled: d, n >= 1");
    SmallestRootResult res;
    res.d = d;
    res.n = n;
    res.r0_exact_form = "n*(1 - cos(pi/(2d)))";
    IntervalQ pi = pi_enclosure(precision_bits < 128 ? 128 : precision_bits);
    res.pi_bound = pi.hi * pi.hi * Rational(n) / Rational(4 * d * d);

    if (d == 1) {
        // T_1(x/n - 1) has its only root at exactly x = n.
        res.r0_enclosure = IntervalQ(Rational(n), Rational(n));
        res.exact = true;
        res.sign_at_lo = 0;
        res.sign_at_hi = 0;
        return res;
    }

    auto f_sign = [&](const Rational& x) {
        return sign(chebyshev_T_value(static_cast<unsigned>(d), x / Rational(n) - 1));
    };
    Rational lo(0), hi = res.pi_bound;
    int s_lo = f_sign(lo);  // (-1)^d
    int s_hi = f_sign(hi);
    if (s_lo == s_hi || s_lo == 0) throw std::logic_error("smallest-root bracket failed");
    if (s_hi == 0) {
        // The pi bound happens to be the root (cannot occur: the root is
        // irrational for d >= 2), but keep the code honest.
        res.r0_enclosure = IntervalQ(hi, hi);
        res.exact = true;
        return res;
    }
    Rational target_width = pow2_rational(-static_cast<long>(precision_bits)) * Rational(n);
    while (hi - lo > target_width) {
        Rational mid = (lo + hi) / 2;
        int s_mid = f_sign(mid);
        if (s_mid == 0) {
            lo = hi = mid;
            res.exact = true;
            break;
        }
        if (s_mid == s_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    res.r0_enclosure = IntervalQ(lo, hi);
    res.sign_at_lo = f_sign(lo);
    res.sign_at_hi = f_sign(hi);
    return res;
}

MarkovCheckReport markov_derivative_bound_check(long d, const Rational& grid_step) {
    if (d < 1) throw std::invalid_argument("markov check: d >= 1");
    if (grid_step <= 0) throw std::invalid_argument("markov check: positive grid step");
    MarkovCheckReport rep;
    rep.d = d;
    rep.grid_step = grid_step;
    const Rational bound(d * d);
    rep.grid_ok = true;
    for (Rational x(-1); x <= 1; x += grid_step) {
        Rational v = Rational(d) * chebyshev_U_value(static_cast<unsigned>(d - 1), x);
        if (abs_rational(v) > bound) {
            rep.grid_ok = false;
            break;
        }
    }
    UniPoly tp = Rational(d) * chebyshev_U(static_cast<unsigned>(d - 1));  // T_d'
    UniPoly claim = UniPoly::constant(Rational(d) * d * d * d) - tp * tp;
    if (claim.is_zero()) {
        // d = 1: T_1' is the constant 1 and the claim collapses to 0 >= 0.
        rep.global_cert.poly = claim;
        rep.global_cert.interval = IntervalQ(Rational(-1), Rational(1));
        rep.global_cert.verdict = SignVerdict::Nonnegative;
        rep.global_cert.method = "evaluation";
    } else {
        rep.global_cert = prove_nonneg(claim, IntervalQ(Rational(-1), Rational(1)));
    }
    return rep;
}

long refinement_first_n(long c, const std::vector<long>& n_grid, long d_cap, long d_stride) {
    for (long n : n_grid) {
        bool all_ok = true;
        for (long d = 2; d <= std::min(n, d_cap); d += d_stride) {
            GrowthBoundCheck chk = verify_growth_bounds(n, d, Rational(c));
            if (chk.case_id == 1 && !chk.refinement_ok) {
                all_ok = false;
                break;
            }
        }
        if (all_ok) return n;
    }
    return -1;
}

}  // namespace soscert
