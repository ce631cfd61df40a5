#ifndef SOSCERT_INTPOLY_HPP
#define SOSCERT_INTPOLY_HPP

#include <utility>
#include <vector>

#include "soscert/rational.hpp"
#include "soscert/unipoly.hpp"

namespace soscert {

// Integer-coefficient polynomial engine behind the exact root machinery.
// Coefficient i multiplies x^i; normal form strips trailing zeros.
using ZPoly = std::vector<Integer>;

namespace zp {

void normalize(ZPoly& p);
inline bool is_zero(const ZPoly& p) { return p.empty(); }
inline long degree(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }

ZPoly from_unipoly(const UniPoly& p);  // content-normalized integer image, same roots & signs up to a positive factor
UniPoly to_unipoly(const ZPoly& p);

ZPoly derivative(const ZPoly& p);
ZPoly neg(ZPoly p);
ZPoly mul(const ZPoly& a, const ZPoly& b);

// Sign of p at a rational point (homogeneous evaluation, exact).
int sign_at(const ZPoly& p, const Rational& x);
// Exact value of p at a rational point.
Rational value_at(const ZPoly& p, const Rational& x);

Integer content(const ZPoly& p);
ZPoly primitive_part(const ZPoly& p);  // keeps the sign of the leading coefficient

// In-place p(x) <- p(x + 1). O(d^2) additions.
void taylor_shift_1(ZPoly& p);
// p(x) <- 2^deg * p(x/2): maps roots in (0,1/2) to (0,1).
void scale_half(ZPoly& p);
// Reverses coefficients: x^deg * p(1/x). Trailing zeros of the input become
// leading zeros and are stripped (roots at 0 must be removed beforehand).
ZPoly reversed(const ZPoly& p);

// Number of sign changes in the coefficient list (zeros skipped).
int coeff_sign_variations(const ZPoly& p);

// Descartes bound for the number of roots in (0,1): sign variations of
// (1+x)^deg * p(1/(1+x)).
int descartes_01_bound(const ZPoly& p);

// gcd over Z (primitive, positive leading coefficient), by the modular
// algorithm with an exact division check, so the result is unconditionally
// correct.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

// Exact division; throws if not exact.
ZPoly exact_div(const ZPoly& a, const ZPoly& b);

// Square-free part p / gcd(p, p').
ZPoly squarefree_part(const ZPoly& p);

// Yun decomposition: returns f_1, f_2, ... with p ~ prod f_m^m up to a
// constant; each f_m square-free, pairwise coprime, f_m's roots are exactly
// the roots of p of multiplicity m.
std::vector<ZPoly> yun_decomposition(const ZPoly& p);

// Product of the odd-multiplicity factors: its roots are the sign-change
// points of p.
ZPoly odd_multiplicity_part(const ZPoly& p);

// Sturm chain of the square-free part of p: primitive integer sequence whose
// signs agree with the canonical sequence everywhere.
std::vector<ZPoly> sturm_chain(const ZPoly& p);

// Sign variations of the chain at a point, zeros skipped.
int chain_variations_at(const std::vector<ZPoly>& chain, const Rational& x);

// Distinct roots of p in (lo, hi] by Sturm's theorem (chain of square-free part).
long sturm_count_halfopen(const std::vector<ZPoly>& chain, const Rational& lo, const Rational& hi);

// Cauchy root bound: all real roots lie in [-B, B].
Rational cauchy_root_bound(const ZPoly& p);

}  // namespace zp

}  // namespace soscert

#endif
