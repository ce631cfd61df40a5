#ifndef SOSCERT_RATIONAL_HPP
#define SOSCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

namespace soscert {

using Integer = mpz_class;

// Exact rational scalar backed by GMP. Canonical form (denominator > 0,
// gcd(num, den) == 1) holds after every construction and operation; the
// two-argument constructors canonicalize, which raw mpq_class does not.
class Rational : public mpq_class {
  public:
    Rational() : mpq_class() {}
    Rational(const mpq_class& q) : mpq_class(q) {}
    Rational(mpq_class&& q) : mpq_class(std::move(q)) {}
    template <class T, class U>
    Rational(const __gmp_expr<T, U>& e) : mpq_class(e) {}

    template <typename N, std::enable_if_t<std::is_integral_v<N>, int> = 0>
    Rational(N n) : mpq_class(Integer(n)) {}
    Rational(const Integer& z) : mpq_class(z) {}

    template <typename N, typename D,
              std::enable_if_t<std::is_integral_v<N> && std::is_integral_v<D>, int> = 0>
    Rational(N n, D d) : Rational(Integer(n), Integer(d)) {}

    Rational(const Integer& num, const Integer& den) : mpq_class(num, den) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        canonicalize();
    }
};

inline Rational make_rational(long num, long den = 1) { return Rational(num, den); }
inline Rational make_rational(const Integer& num, const Integer& den) { return Rational(num, den); }

// Parses "a/b" or "a".
Rational rational_from_string(const std::string& s);

// Serialized form "num/den" (den omitted when 1), both in base 10.
std::string rational_to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational pow_rational(const Rational& base, unsigned long e);

// 2^e for e possibly negative.
Rational pow2_rational(long e);

inline Integer floor_rational(const Rational& q) {
    Integer t;
    mpz_fdiv_q(t.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return t;
}

inline Integer ceil_rational(const Rational& q) {
    Integer t;
    mpz_cdiv_q(t.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return t;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Smallest t with 2^t >= q (q > 0). Exact integer arithmetic.
long ceil_log2(const Rational& q);

// Smallest nonnegative integer t with t*t*den >= num, i.e. ceil(sqrt(num/den)).
Integer ceil_sqrt_ratio(const Integer& num, const Integer& den);

// Rounds q to a dyadic m/2^bits; dir > 0 rounds up, dir < 0 rounds down.
Rational round_dyadic(const Rational& q, unsigned bits, int dir);

struct IntervalQ {
    Rational lo;
    Rational hi;

    IntervalQ() = default;
    IntervalQ(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("interval with lo > hi");
    }

    Rational width() const { return hi - lo; }
    Rational mid() const { return Rational((lo + hi) / 2); }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool is_point() const { return lo == hi; }
};

}  // namespace soscert

#endif
