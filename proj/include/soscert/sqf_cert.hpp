#ifndef SOSCERT_SQF_CERT_HPP
#define SOSCERT_SQF_CERT_HPP

#include <optional>
#include <string>
#include <vector>

#include "soscert/rational.hpp"
#include "soscert/roots.hpp"
#include "soscert/sos_evidence.hpp"
#include "soscert/unipoly.hpp"

namespace soscert {

// q_k(x) = (x - k + 1)(x - k): the univariate face of the symmetric quadratic.
UniPoly sqf_target(long k);

enum class SqfMode { Theory, Search };

struct SqfParams {
    long n = 0;
    long k = 0;
    long e_g = 0;   // even exponent on x^.(x-2k+1)^. inside g
    long d_H = 0;   // Chebyshev degree inside H
    long e_p = 0;   // outer exponent of the bump polynomial
    long m_s2 = 0;  // outer even exponent of s2
    Rational C;     // bump parameter, > H(k-1)
    SqfMode mode = SqfMode::Search;
};

// Theory constants as written: e_g = 16k, d_H = ceil(sqrt(n/k)),
// C = upper enclosure of e^(8 sqrt 3), e_p = 4*ceil(C^2),
// m_s2 = 40*ceil(k*log2 n).
SqfParams theory_params(long n, long k);

struct ConditionReport {
    std::string name;
    std::string anchor;  // stable machine id of the condition
    bool pass = false;
    std::string note;
    std::optional<Rational> witness;
    std::vector<SignCertificate> certificates;
};

// g(x) = x^e (x - 2k + 1)^e * prod_{i in {0..2k-1} minus {k-1,k}} (x - i)
UniPoly build_g(long k, long e_g);

// k = 1: x(x-1). Odd k: g/g(k-1) * q_k. Even k: -g (x+1)(x-2k) q_k /(g(k-1) k (k+1)).
UniPoly build_s1(long n, long k, long e_g);

// Evidence that s1 is SoS modulo the Boolean axioms (falling-factorial route).
EvidencePtr s1_evidence(long n, long k, long e_g);

// The four interval conditions on r = s1/q_k, against |r| <= bound_B on the
// outer interval. bound_B defaults to n^(40k) at the call sites that follow
// the stated constants.
std::vector<ConditionReport> verify_s1_conditions(long n, long k, const UniPoly& s1, const Rational& bound_B);

// H(x) = T_dH(2x/n - 1 - 2(2k-1)/n)^2
UniPoly build_H(long n, long k, long d_H);

struct HPropertyReport {
    std::vector<ConditionReport> conditions;  // H<=1 outside, H' < 0, H(0) <= C, H(k) >= 3/2
    Rational a;                               // H(k)
    Rational b;                               // H(k-1)
    bool all_pass() const;
};

HPropertyReport verify_H_properties(long n, long k, const UniPoly& H, const Rational& C);

// (1 - (x-a)(x-b)/C^2)^e_p, requiring 3/2 <= a < b < C.
UniPoly build_p_abc(const Rational& a, const Rational& b, const Rational& C, long e_p);

// p_abc composed with H, raised to the even outer exponent.
UniPoly build_s2(long n, long k, const SqfParams& params);

// Search-scale bump parameter: just above b, enlarged when H(0) would push
// the bump base below -1 on the left flank.
Rational default_search_C(const UniPoly& H, const Rational& a, const Rational& b);

// Direct re-verification of the s2-side interval conditions for a
// materialized s2 (search-scale exponents), against s2 <= 1/bound_B outside.
std::vector<ConditionReport> verify_s2_conditions(long n, long k, const UniPoly& s2, const Rational& bound_B);

struct SqfCertificate {
    SqfParams params;
    bool passed = false;
    UniPoly s1;
    UniPoly s2;  // empty in theory mode (not materializable at theory exponents)
    UniPoly s;
    std::vector<ConditionReport> condition_reports;
    SignCertificate final_check;  // q_k - s >= 0 on [0, n]
    bool final_is_zero = false;   // k = 1: the difference is identically zero
    std::vector<Rational> level_margins;  // q_k(j) - s(j) for j = 0..n
    EvidencePtr evidence_s;               // SoS-mod-axioms tree for s
    EvidencePtr evidence_difference;      // lift of q_k - s
    EvidencePtr evidence_qk;              // Sum of the two: claims q_k exactly
    long total_degree = 0;                // deg(s); matches evidence_s degree report
    long certificate_degree = 0;          // SoS program degree: ceil(max involved degree / 2)
    Integer theory_degree;                // symbolic degree at theory exponents
};

// End-to-end assembly. Theory mode certifies s1 directly and s2 through its
// factor lemmas; search mode materializes everything and runs the final
// interval check.
SqfCertificate assemble_sqf_certificate(long n, long k, const SqfParams& params);

// Deterministic parameter search: candidates ordered by total degree, first
// exact pass wins. Returns the passing certificate, or the best failing
// report when the budget is exhausted.
SqfCertificate search_sqf_certificate(long n, long k);

// Evidence that (x-a)(x-b) with k-1 <= a <= b <= k is SoS modulo the Boolean
// axioms, on top of a base certificate for q_k:
// (x-a)(x-b) = (k-a)(k-b)(x-k+1)^2 + (a-k+1)(b-k+1)(x-k)^2 + c3 * q_k.
EvidencePtr certificate_for_shifted_roots(long n, long k, const Rational& a, const Rational& b,
                                          const SqfCertificate& base);

}  // namespace soscert

#endif
