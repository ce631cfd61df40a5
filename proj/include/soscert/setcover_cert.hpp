#ifndef SOSCERT_SETCOVER_CERT_HPP
#define SOSCERT_SETCOVER_CERT_HPP

#include <optional>
#include <string>
#include <vector>

#include "soscert/interval_sos.hpp"
#include "soscert/knapsack_cert.hpp"
#include "soscert/rational.hpp"
#include "soscert/sqf_cert.hpp"
#include "soscert/unipoly.hpp"

namespace soscert {

// g~(x) = (n-1)x - n, the aggregated constraint.
UniPoly sc_constraint_aggregate(long n);

// Checks sum_i (sum_{j != i} x_j - 1) = (n-1)|x| - n at every integer level
// and, for n <= 12, over the whole hypercube.
ConditionReport verify_sc_aggregation(long n);

struct ScParams {
    long n = 0;
    long d = 0;
    Rational alpha;
    long m = 0;
    bool corollary_set = false;  // alpha = 1/n, m = 2 ceil(log2 n) variant
};

// Default set: d = ceil(3 sqrt n), alpha = 1/(18n), m = 2*ceil(log2 sqrt(18n)).
ScParams sc_params(long n, bool corollary_set = false);

// s~(x) = s~_{alpha,d,m}(x - 1), built through the knapsack constructor.
UniPoly build_sc_stilde(long n, const ScParams& params, unsigned precision_bits, MkParams* mk_out = nullptr);

std::vector<ConditionReport> verify_sc_properties(long n, const UniPoly& stilde);

struct ScMainCertificate {
    long n = 0;
    ScParams params;
    bool passed = false;
    UniPoly stilde;
    UniPoly stilde0;  // x - 2 - stilde * ((n-1)x - n)
    std::vector<ConditionReport> condition_reports;
    std::optional<RootBox> root_a;  // the zero inside [1, n/(n-1)]
    UniPoly positive_part;          // stilde0 / ((x - a)(x - 2)) up to a small remainder
    Rational pairing_residual_bound;
    EvidencePtr evidence;  // Lift(positive part) * shifted-root evidence over the k=2 base
    long base_q2_degree = 0;
    long total_degree = 0;
    long certificate_degree = 0;
};

// base_q2 may be supplied to reuse a search-mode certificate for q_2 at this
// n; otherwise one is searched internally.
ScMainCertificate assemble_sc_main(long n, bool corollary_set = false, unsigned precision_bits = 128,
                                   const SqfCertificate* base_q2 = nullptr);

// ---- appendix route --------------------------------------------------------

struct ScAsymmetricFragment {
    std::string constraint;  // which generator the term multiplies
    std::string multiplier;  // the multiplier attached to it
    std::string sos_weight;  // how the multiplier is justified
};

struct ScHEvidence {
    bool h1_level_identity = false;   // x - 1 = ((n-1)x - n)/(n-1) + 1/(n-1), coefficientwise
    bool h2_level_identity = false;   // x(x-2) matches the expansion at all levels
    bool hypercube_identity = false;  // full 2^n check (n <= 12), both expansions
    std::vector<ScAsymmetricFragment> h1_fragments;
    std::vector<ScAsymmetricFragment> h2_fragments;
    bool all_pass() const { return h1_level_identity && h2_level_identity && hypercube_identity; }
};

ScHEvidence build_h1_h2_evidence(long n);

struct ScP1P2 {
    long d1 = 0;  // ceil(2 sqrt(n) log2 n)
    UniPoly p1;
    UniPoly p2;
    Rational c1;
    Rational c2;
};

ScP1P2 build_p1_p2(long n);

std::vector<ConditionReport> verify_appendix_lemmas(long n, const ScP1P2& pp);

struct ScAppendixCertificate {
    long n = 0;
    ScP1P2 parts;
    bool passed = false;
    UniPoly f;  // x - 2 - p1 (x-1) - p2 x(x-2)
    std::vector<ConditionReport> condition_reports;
    ScHEvidence h_evidence;
    std::optional<IntervalSosDecomposition> decomposition;  // of f on [0, n]
    long total_degree = 0;
    long certificate_degree = 0;
};

ScAppendixCertificate assemble_sc_appendix(long n, unsigned precision_bits = 128, bool decompose = true);

}  // namespace soscert

#endif
