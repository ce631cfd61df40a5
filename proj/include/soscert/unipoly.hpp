#ifndef SOSCERT_UNIPOLY_HPP
#define SOSCERT_UNIPOLY_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "soscert/rational.hpp"

namespace soscert {

// Dense univariate polynomial over Rational. Coefficient i multiplies x^i.
// Normal form: no trailing zero coefficients; the zero polynomial is the
// empty coefficient list and has degree -1.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rational& a);
    static UniPoly monomial(const Rational& a, std::size_t power);
    // x - r
    static UniPoly linear_root(const Rational& r);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& leading() const;
    bool is_constant() const { return c_.size() <= 1; }

    Rational operator()(const Rational& x) const;  // exact evaluation

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

    std::string to_string(const std::string& var = "x") const;

  private:
    void normalize();
    std::vector<Rational> c_;

    friend UniPoly operator+(const UniPoly&, const UniPoly&);
    friend UniPoly operator-(const UniPoly&, const UniPoly&);
    friend UniPoly operator*(const UniPoly&, const UniPoly&);
    friend UniPoly operator-(const UniPoly&);
    friend UniPoly operator*(const Rational&, const UniPoly&);
};

UniPoly operator+(const UniPoly& p, const UniPoly& q);
UniPoly operator-(const UniPoly& p, const UniPoly& q);
UniPoly operator*(const UniPoly& p, const UniPoly& q);
UniPoly operator-(const UniPoly& p);
UniPoly operator*(const Rational& a, const UniPoly& p);
inline UniPoly operator*(const UniPoly& p, const Rational& a) { return a * p; }
UniPoly operator/(const UniPoly& p, const Rational& a);

// outer(inner), exact.
UniPoly compose(const UniPoly& outer, const UniPoly& inner);

UniPoly derivative(const UniPoly& p);

// p^e by repeated squaring.
UniPoly pow(const UniPoly& p, unsigned long e);

// Quotient and remainder over the rationals; q must be nonzero.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& p, const UniPoly& q);

// Division known to be exact; throws if a remainder is left.
UniPoly exact_div(const UniPoly& p, const UniPoly& q);

// Chebyshev polynomials of the first and second kind.
UniPoly chebyshev_T(unsigned d);
UniPoly chebyshev_U(unsigned d);

// Max |coefficient|.
Rational coeff_norm_inf(const UniPoly& p);

// Multiplicity of the rational root r (0 if p(r) != 0).
int root_multiplicity(const UniPoly& p, const Rational& r);

}  // namespace soscert

#endif
