#ifndef SOSCERT_INTERVAL_SOS_HPP
#define SOSCERT_INTERVAL_SOS_HPP

#include <vector>

#include "soscert/rational.hpp"
#include "soscert/roots.hpp"
#include "soscert/sos_evidence.hpp"
#include "soscert/unipoly.hpp"

namespace soscert {

// Constructive two-sided decomposition of a polynomial nonnegative on [a,b]:
//   deg p even:  p ~ S + (x-a)(b-x) T
//   deg p odd:   p ~ (x-a) S + (b-x) T
// with S, T sums of coef * square. Root finding is approximate; the residual
// p - assembled is bounded exactly and reported. The nonnegativity verdict
// itself always comes from prove_nonneg, never from this construction.
struct IntervalSosDecomposition {
    UniPoly p;
    IntervalQ interval;
    bool even_parity = true;
    std::vector<std::pair<Rational, UniPoly>> s_terms;
    std::vector<std::pair<Rational, UniPoly>> t_terms;
    UniPoly assembled;
    UniPoly residual;
    Rational residual_bound;  // certified sup bound of |residual| on the interval
    unsigned precision_bits_used = 0;

    long s_degree() const;
    long t_degree() const;
};

IntervalSosDecomposition decompose_on_interval(const UniPoly& p, const IntervalQ& I, unsigned precision_bits);

// Evidence that a polynomial nonnegative on [0,n] is SoS modulo the Boolean
// axioms: exact special cases (constants, multiples of x(n-x)) or a certified
// lift leaf, optionally with the materialized decomposition attached.
// A caller that already certified p on [0,n] can pass its certificate to
// avoid re-deciding.
EvidencePtr lift_nonneg_to_hypercube(const UniPoly& p, long n, unsigned precision_bits = 128,
                                     bool materialize = false,
                                     const SignCertificate* precomputed = nullptr);

}  // namespace soscert

#endif
