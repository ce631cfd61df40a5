#include "soscert/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace soscert {

void UniPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& a) {
    UniPoly p;
    if (a != 0) p.c_.push_back(a);
    return p;
}

UniPoly UniPoly::monomial(const Rational& a, std::size_t power) {
    UniPoly p;
    if (a != 0) {
        p.c_.assign(power + 1, Rational(0));
        p.c_[power] = a;
    }
    return p;
}

UniPoly UniPoly::linear_root(const Rational& r) { return UniPoly{-r, Rational(1)}; }

const Rational& UniPoly::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return c_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

UniPoly operator+(const UniPoly& p, const UniPoly& q) {
    UniPoly r;
    r.c_.resize(std::max(p.c_.size(), q.c_.size()), Rational(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) r.c_[i] = p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) r.c_[i] += q.c_[i];
    r.normalize();
    return r;
}

UniPoly operator-(const UniPoly& p, const UniPoly& q) {
    UniPoly r;
    r.c_.resize(std::max(p.c_.size(), q.c_.size()), Rational(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) r.c_[i] = p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) r.c_[i] -= q.c_[i];
    r.normalize();
    return r;
}

UniPoly operator-(const UniPoly& p) {
    UniPoly r = p;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly operator*(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) return UniPoly();
    UniPoly r;
    r.c_.assign(p.c_.size() + q.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
        if (p.c_[i] == 0) continue;
        for (std::size_t j = 0; j < q.c_.size(); ++j) {
            if (q.c_[j] == 0) continue;
            r.c_[i + j] += p.c_[i] * q.c_[j];
        }
    }
    r.normalize();
    return r;
}

UniPoly operator*(const Rational& a, const UniPoly& p) {
    if (a == 0) return UniPoly();
    UniPoly r = p;
    for (auto& c : r.c_) c *= a;
    return r;
}

UniPoly operator/(const UniPoly& p, const Rational& a) {
    if (a == 0) throw std::invalid_argument("division of polynomial by zero scalar");
    return Rational(Rational(1) / a) * p;
}

UniPoly compose(const UniPoly& outer, const UniPoly& inner) {
    // Horner in the inner polynomial.
    UniPoly acc;
    const auto& oc = outer.coeffs();
    for (auto it = oc.rbegin(); it != oc.rend(); ++it) {
        acc = acc * inner + UniPoly::constant(*it);
    }
    return acc;
}

UniPoly derivative(const UniPoly& p) {
    if (p.degree() <= 0) return UniPoly();
    std::vector<Rational> d(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * p.coeffs()[i];
    return UniPoly(std::move(d));
}

UniPoly pow(const UniPoly& p, unsigned long e) {
    UniPoly result = UniPoly::constant(1);
    UniPoly base = p;
    while (e > 0) {
        if (e & 1UL) result = result * base;
        e >>= 1UL;
        if (e > 0) base = base * base;
    }
    return result;
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& p, const UniPoly& q) {
    if (q.is_zero()) throw std::invalid_argument("polynomial division by zero");
    const long dq = q.degree();
    if (p.degree() < dq) return {UniPoly(), p};
    std::vector<Rational> rem(p.coeffs());
    std::vector<Rational> quot(static_cast<std::size_t>(p.degree() - dq) + 1, Rational(0));
    const Rational& lead = q.leading();
    for (long dr = p.degree(); dr >= dq; --dr) {
        Rational f = rem[static_cast<std::size_t>(dr)] / lead;
        if (f != 0) {
            quot[static_cast<std::size_t>(dr - dq)] = f;
            for (long i = 0; i < dq; ++i) {
                rem[static_cast<std::size_t>(dr - dq + i)] -= f * q.coeffs()[static_cast<std::size_t>(i)];
            }
        }
        rem[static_cast<std::size_t>(dr)] = 0;
    }
    rem.resize(static_cast<std::size_t>(dq > 0 ? dq : 0));
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& p, const UniPoly& q) {
    auto [quot, rem] = divrem(p, q);
    if (!rem.is_zero()) throw std::logic_error("exact_div left a remainder");
    return quot;
}

UniPoly chebyshev_T(unsigned d) {
    UniPoly prev = UniPoly::constant(1);
    if (d == 0) return prev;
    UniPoly cur{Rational(0), Rational(1)};  // x
    const UniPoly two_x{Rational(0), Rational(2)};
    for (unsigned i = 2; i <= d; ++i) {
        UniPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

UniPoly chebyshev_U(unsigned d) {
    UniPoly prev = UniPoly::constant(1);
    if (d == 0) return prev;
    UniPoly cur{Rational(0), Rational(2)};  // 2x
    const UniPoly two_x{Rational(0), Rational(2)};
    for (unsigned i = 2; i <= d; ++i) {
        UniPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational coeff_norm_inf(const UniPoly& p) {
    Rational m(0);
    for (const auto& c : p.coeffs()) {
        Rational a = abs_rational(c);
        if (a > m) m = a;
    }
    return m;
}

int root_multiplicity(const UniPoly& p, const Rational& r) {
    if (p.is_zero()) throw std::invalid_argument("root multiplicity of the zero polynomial");
    int m = 0;
    UniPoly cur = p;
    UniPoly factor = UniPoly::linear_root(r);
    while (!cur.is_constant() && cur(r) == 0) {
        cur = exact_div(cur, factor);
        ++m;
    }
    return m;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = abs_rational(c);
        if (i == 0 || a != 1) os << rational_to_string(a);
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace soscert
