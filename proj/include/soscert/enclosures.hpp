#ifndef SOSCERT_ENCLOSURES_HPP
#define SOSCERT_ENCLOSURES_HPP

#include "soscert/rational.hpp"

namespace soscert {

// Directed rational enclosures of the handful of transcendental values the
// certificates compare against. Every enclosure is sound: the true value lies
// in [lo, hi]. Verdict paths use only the appropriate endpoint.

IntervalQ pi_enclosure(unsigned bits);

// sqrt of a nonnegative rational.
IntervalQ sqrt_enclosure(const Rational& x, unsigned bits);

IntervalQ exp_enclosure(const Rational& x, unsigned bits);
IntervalQ exp_enclosure(const IntervalQ& x, unsigned bits);

// natural log, x > 0.
IntervalQ ln_enclosure(const Rational& x, unsigned bits);

IntervalQ log2_enclosure(const Rational& x, unsigned bits);

// ceil(log2(x)) for rational x > 0, exact.
long ceil_log2_exact(const Rational& x);

// Smallest integer >= sqrt(num/den), exact.
long ceil_sqrt_exact(long num, long den = 1);

// Smallest integer >= log2(x) rounded via enclosure; exact when x is a power
// of two. Used for ceil(k * log2(n))-style exponents.
Integer ceil_of_enclosed(const IntervalQ& enc);

// e^{8*sqrt(3)} from above; the constant bounding H_k(0).
Rational upper_e_8_sqrt3(unsigned bits = 128);

// Sign of x - y*sqrt(u) for rationals with y, u >= 0 handled by squaring;
// exact. Returns -1, 0, +1.
int compare_against_sqrt(const Rational& x, const Rational& y, const Rational& u);

// (1 + s*sqrt(u))^e expanded as A + B*sqrt(u) with A, B rational.
void expand_binomial_sqrt(const Rational& s, const Rational& u, unsigned long e, Rational& A, Rational& B);

}  // namespace soscert

#endif
