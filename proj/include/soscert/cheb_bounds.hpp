#ifndef SOSCERT_CHEB_BOUNDS_HPP
#define SOSCERT_CHEB_BOUNDS_HPP

#include <string>
#include <vector>

#include "soscert/rational.hpp"
#include "soscert/roots.hpp"
#include "soscert/unipoly.hpp"

namespace soscert {

// T_d evaluated at a rational point by the value recurrence (cheaper than
// expanding coefficients for large d).
Rational chebyshev_T_value(unsigned d, const Rational& y);
Rational chebyshev_U_value(unsigned d, const Rational& y);

// Checked instance of the off-interval growth inequalities for
// L = T_d(-1 - c/n)^2:
//   case 1 (0 <= c <= n, d <= n):  (1/4)(1+sqrt(2c/n))^{2d} <= L <= (1+2*sqrt(2c/n))^{2d}
//     refinement (large n):        L <= (1+sqrt((2c+1)/n))^{2d}
//   case 2 (c > n):                L <= (1+3c/n)^{2d}
// Square roots never enter the verdict: each inequality is decided on its
// squared rational form.
struct GrowthBoundCheck {
    long n = 0;
    long d = 0;
    Rational c;
    Rational lhs;  // exact value of T_d(-1-c/n)^2
    int case_id = 1;
    bool lower_ok = false;
    bool upper_ok = false;
    bool refinement_ok = false;  // recorded, never asserted (asymptotic statement)
    bool case2_upper_ok = false;

    bool all_applicable_pass() const { return case_id == 1 ? (lower_ok && upper_ok) : case2_upper_ok; }
};

GrowthBoundCheck verify_growth_bounds(long n, long d, const Rational& c);

// Enclosure of the smallest root of T_d(x/n - 1), plus the pi^2 n / (4 d^2)
// upper bound it must respect.
struct SmallestRootResult {
    long d = 0;
    long n = 0;
    std::string r0_exact_form;  // symbolic tag
    IntervalQ r0_enclosure;
    Rational pi_bound;  // rational upper bound of pi^2 n/(4 d^2)
    int sign_at_lo = 0;
    int sign_at_hi = 0;
    bool exact = false;  // d == 1: the root is the rational n
};

SmallestRootResult smallest_root_scaled(long d, long n, unsigned precision_bits);

// |T'_d| <= d^2 on [-1,1]: exact grid sweep plus a global certificate for
// d^4 - T'_d(x)^2 >= 0.
struct MarkovCheckReport {
    long d = 0;
    Rational grid_step;
    bool grid_ok = false;
    SignCertificate global_cert;
    bool passed() const { return grid_ok && global_cert.passed(); }
};

MarkovCheckReport markov_derivative_bound_check(long d, const Rational& grid_step);

// Smallest n in the grid where the case-1 refinement bound holds for every
// lattice degree d <= min(n, d_cap); -1 when it never does. Recorded data,
// not an asserted threshold.
long refinement_first_n(long c, const std::vector<long>& n_grid, long d_cap = 200, long d_stride = 10);

}  // namespace soscert

#endif
