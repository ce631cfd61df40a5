#ifndef SOSCERT_ROOTS_HPP
#define SOSCERT_ROOTS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "soscert/intpoly.hpp"
#include "soscert/rational.hpp"
#include "soscert/unipoly.hpp"

namespace soscert {

enum class SignVerdict { Nonnegative, Positive, RootCount, Falsified };

std::string to_string(SignVerdict v);

// Isolating interval for one distinct real root. Either an exact rational
// point (lo == hi) or an open interval (lo, hi) containing exactly one root,
// with the isolated polynomial nonzero at both endpoints.
struct RootBox {
    Rational lo;
    Rational hi;
    bool exact = false;
    Rational mid() const { return exact ? lo : Rational((lo + hi) / 2); }
};

// Exact sign evidence for a polynomial over a closed rational interval.
//
// RootCount verdicts count distinct roots in (lo, hi]; the left endpoint is
// checked separately by exact evaluation (sign_lo), which avoids double
// counting when chaining adjacent intervals.
struct SignCertificate {
    UniPoly poly;
    IntervalQ interval;
    SignVerdict verdict = SignVerdict::Falsified;
    bool strict = false;

    long root_count = -1;  // distinct roots in (lo, hi]
    std::vector<std::pair<int, long>> multiplicity_counts;  // (multiplicity, distinct roots)

    std::vector<UniPoly> sturm_sequence;  // primitive chain of the square-free part, when the Sturm engine ran
    int variations_lo = -1;
    int variations_hi = -1;
    int sign_lo = 0;
    int sign_hi = 0;

    std::optional<Rational> witness;       // rational point with p < 0 (<= 0 when strict)
    std::optional<Rational> sample_point;  // interior non-root sample backing a nonneg verdict
    std::vector<RootBox> isolating_intervals;
    std::string method;  // "sturm" | "descartes" | "evaluation"

    bool passed() const { return verdict != SignVerdict::Falsified; }
    long roots_with_multiplicity() const;
};

struct IsolationResult {
    std::vector<RootBox> boxes;  // sorted left to right
    UniPoly squarefree;          // integer-content-free square-free image used for isolation
};

// Distinct real roots of p in the open interval (lo, hi), by Descartes
// bisection on the square-free part. Exact integer arithmetic throughout.
IsolationResult isolate_roots_open(const UniPoly& p, const IntervalQ& I);

// Shrinks a box until hi - lo <= eps. The polynomial must be the square-free
// image from IsolationResult (sign change across the box is relied on).
RootBox refine_root(const UniPoly& squarefree, const RootBox& box, const Rational& eps);

// Distinct roots in (lo, hi] via a Sturm chain; multiplicities via Yun.
SignCertificate sturm_count_roots(const UniPoly& p, const IntervalQ& I);

// Same contract via root isolation (for degrees where dense chains blow up).
SignCertificate descartes_count_roots(const UniPoly& p, const IntervalQ& I);

// Degree threshold above which count_roots switches engines.
inline constexpr long kSturmDegreeLimit = 64;

SignCertificate count_roots(const UniPoly& p, const IntervalQ& I);

// Decides p >= 0 on I (p > 0 when strict). Exact; no floating point on the
// decision path. On failure the certificate carries a rational witness.
SignCertificate prove_nonneg(const UniPoly& p, const IntervalQ& I, bool strict = false);

// Rigorous enclosure of the range of p on I (sound, not tight).
IntervalQ interval_bound(const UniPoly& p, const IntervalQ& I, unsigned precision_bits);

}  // namespace soscert

#endif
