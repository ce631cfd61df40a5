#ifndef SOSCERT_ABERTH_HPP
#define SOSCERT_ABERTH_HPP

#include <vector>

#include "soscert/rational.hpp"
#include "soscert/unipoly.hpp"

namespace soscert {

// Approximate complex root, reported as exact dyadic rationals read off the
// float representation. Construction-side data only; verdicts never depend
// on it.
struct ComplexRootEstimate {
    Rational re;
    Rational im;
};

// All complex roots of p by the Aberth-Ehrlich iteration at the requested
// working precision. Throws when the iteration fails to settle (retry with
// more bits).
std::vector<ComplexRootEstimate> find_complex_roots(const UniPoly& p, unsigned precision_bits);

}  // namespace soscert

#endif
