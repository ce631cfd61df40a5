#ifndef SOSCERT_SOS_EVIDENCE_HPP
#define SOSCERT_SOS_EVIDENCE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "soscert/rational.hpp"
#include "soscert/roots.hpp"
#include "soscert/unipoly.hpp"

namespace soscert {

// Checkable provenance of "SoS modulo the Boolean axioms" claims for
// symmetric polynomials, written in the univariate representative. Every
// node carries the polynomial it claims and a degree tag; check_evidence
// re-derives both from the construction rule.
enum class EvidenceKind {
    Square,                 // u(x)^2
    NonnegScalar,           // c >= 0
    Sum,                    // sum of children
    Product,                // product of children
    EvenPower,              // base(x)^e, e even
    VarSumAxiom,            // |x| itself, degree tag 2
    ComplementAxiom,        // n - |x|, degree tag 2
    FallingFactorialAxiom,  // variant A: prod_{i=0}^{2k-1}(x-i); variant B: (x+1)*prod_{i=0}^{2k}(x-i)
    IntervalNonnegLift,     // p with p >= 0 on [0,n] certified; degree tag deg(p)+2
};

struct SosEvidence;
using EvidencePtr = std::shared_ptr<const SosEvidence>;

// Materialized interval-SoS witness attached to a lift leaf. The assembled
// form matches the claimed polynomial only up to residual_bound; the attached
// SignCertificate stays the authoritative nonnegativity verdict.
struct LiftPayload {
    bool even_form = true;  // p ~ S + x(n-x) T, else x S + (n-x) T
    std::vector<std::pair<Rational, UniPoly>> s_terms;  // coef >= 0 times square
    std::vector<std::pair<Rational, UniPoly>> t_terms;
    Rational residual_bound;
};

struct SosEvidence {
    EvidenceKind kind;
    UniPoly claimed_poly;
    long claimed_degree = 0;

    UniPoly base;                       // Square, EvenPower
    Rational scalar;                    // NonnegScalar
    std::vector<EvidencePtr> children;  // Sum, Product
    unsigned long exponent = 0;         // EvenPower
    long ff_k = 0;                      // FallingFactorialAxiom
    char ff_variant = 'A';
    long n_param = 0;                   // ComplementAxiom, IntervalNonnegLift
    SignCertificate lift_cert;          // IntervalNonnegLift
    std::optional<LiftPayload> lift_payload;
};

EvidencePtr ev_square(UniPoly u);
EvidencePtr ev_scalar(Rational c);
EvidencePtr ev_sum(std::vector<EvidencePtr> children);
EvidencePtr ev_product(std::vector<EvidencePtr> children);
EvidencePtr ev_even_power(UniPoly base, unsigned long exponent);
EvidencePtr ev_varsum();
EvidencePtr ev_complement(long n);
EvidencePtr ev_falling_factorial(long k, char variant);
EvidencePtr ev_lift(UniPoly p, long n, SignCertificate cert,
                    std::optional<LiftPayload> payload = std::nullopt);

// The polynomial a falling-factorial axiom claims.
UniPoly falling_factorial_poly(long k, char variant);

struct EvidenceCheckOptions {
    bool reverify_lifts = true;  // re-run prove_nonneg on every lift leaf
};

struct EvidenceCheckReport {
    bool valid = false;
    std::string failing_path;
    std::string message;
    long total_degree = 0;
};

// Recursive structural validation: exact polynomial identities, node side
// conditions, degree bookkeeping. Fails name the offending node path.
EvidenceCheckReport check_evidence(const EvidencePtr& e, long n,
                                   const EvidenceCheckOptions& opts = {});

// Canonical JSON form (node kind, children, coefficients as exact rational
// strings) so reports replay bit-for-bit.
std::string evidence_to_json(const EvidencePtr& e, int indent = -1);

}  // namespace soscert

#endif
