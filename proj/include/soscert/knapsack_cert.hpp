#ifndef SOSCERT_KNAPSACK_CERT_HPP
#define SOSCERT_KNAPSACK_CERT_HPP

#include <utility>
#include <vector>

#include "soscert/cheb_bounds.hpp"
#include "soscert/rational.hpp"
#include "soscert/roots.hpp"
#include "soscert/sqf_cert.hpp"
#include "soscert/unipoly.hpp"

namespace soscert {

struct MkParams {
    long n = 0;
    Rational P;
    long d = 0;
    Rational alpha;
    long m = 0;  // even
    IntervalQ r0_enclosure;
    Rational r0_hat;     // rational stand-in >= true smallest root
    Rational root_gap;   // T_d((x - offset - 1 + r0_hat)/n - 1) value subtracted so the shifted root is exact
};

// alpha * (T_d((x - offset - 1 + r0_hat)/n - 1) - T_d(r0_hat/n - 1))^m.
// offset 0 gives the knapsack multiplier; offset 1 the set-cover one. The
// subtraction pins an exact rational root at x = offset + 1.
UniPoly build_stilde(long n, long d, const Rational& alpha, long m, unsigned precision_bits, long offset,
                     MkParams* params_out = nullptr);

// d = ceil(3 sqrt n), alpha = 1/(2 d^2), m = smallest even integer strictly
// above (ln P - ln alpha)/(d ln(1 + sqrt(2(1-r0)/n)) - ln 4), all by directed
// enclosures; asserts the premise chain.
MkParams choose_params(long n, const Rational& P, unsigned precision_bits = 128);

// Smallest even m with stilde(0) > P for the chosen (d, alpha), by direct
// exact evaluation; the independent oracle for the formula-driven m.
long oracle_minimal_m(long n, const Rational& P, unsigned precision_bits = 128);

// The three strengthened conditions.
std::vector<ConditionReport> verify_mk_conditions(long n, const Rational& P, const UniPoly& stilde1);

// Properties of the multiplier itself (both upper bounds on [1,n] and the
// value lower bound at 0), rationalized comparisons throughout.
std::vector<ConditionReport> verify_stilde_properties(long n, const MkParams& params, const UniPoly& stilde1);

struct MkCertificate {
    MkParams params;
    bool passed = false;
    UniPoly stilde1;
    UniPoly stilde0;  // (x - 1) - stilde1 * (x - 1/P)
    std::vector<ConditionReport> condition_reports;
    std::vector<std::pair<RootBox, RootBox>> root_pairs;  // roots in (0,1], paired left to right
    UniPoly positive_part;                                // quotient by the paired quadratics
    Rational pairing_residual_bound;                      // sup bound of |stilde0 - positive_part * prod quads| on [0,n]
    EvidencePtr evidence;                                 // claims the reassembled product
    long total_degree = 0;
    long certificate_degree = 0;
};

MkCertificate assemble_mk_certificate(long n, const Rational& P, unsigned precision_bits = 128);

}  // namespace soscert

#endif
