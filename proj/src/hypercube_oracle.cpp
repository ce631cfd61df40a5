#include "soscert/hypercube_oracle.hpp"

#include <bit>
#include <stdexcept>

namespace soscert {

LevelVector levels(const UniPoly& p, long n) {
    if (n < 0) throw std::invalid_argument("levels: n >= 0");
    LevelVector lv;
    lv.values.reserve(static_cast<std::size_t>(n) + 1);
    for (long j = 0; j <= n; ++j) lv.values.push_back(p(Rational(j)));
    return lv;
}

Rational MultilinearForm::eval(std::uint32_t point) const {
    Rational acc(0);
    for (const auto& [mask, coef] : terms) {
        if ((mask & point) == mask) acc += coef;
    }
    return acc;
}

MultilinearForm ml_add(const MultilinearForm& a, const MultilinearForm& b) {
    MultilinearForm r = a;
    for (const auto& [mask, coef] : b.terms) {
        auto it = r.terms.find(mask);
        if (it == r.terms.end()) {
            r.terms.emplace(mask, coef);
        } else {
            it->second += coef;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

MultilinearForm ml_scale(const Rational& c, const MultilinearForm& a) {
    MultilinearForm r;
    if (c == 0) return r;
    for (const auto& [mask, coef] : a.terms) r.terms.emplace(mask, Rational(c * coef));
    return r;
}

MultilinearForm ml_mul(const MultilinearForm& a, const MultilinearForm& b) {
    MultilinearForm r;
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            std::uint32_t m = ma | mb;  // x_i^2 collapses to x_i
            Rational prod = ca * cb;
            auto it = r.terms.find(m);
            if (it == r.terms.end()) {
                r.terms.emplace(m, std::move(prod));
            } else {
                it->second += prod;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    }
    return r;
}

ExprPtr Expr::make_const(Rational c) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Const;
    e->constant = std::move(c);
    return e;
}

ExprPtr Expr::make_var(int i) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Var;
    e->var_index = i;
    return e;
}

ExprPtr Expr::add(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Add;
    e->kids = {std::move(a), std::move(b)};
    return e;
}

ExprPtr Expr::sub(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Sub;
    e->kids = {std::move(a), std::move(b)};
    return e;
}

ExprPtr Expr::mul(ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Mul;
    e->kids = {std::move(a), std::move(b)};
    return e;
}

ExprPtr Expr::pow(ExprPtr a, unsigned long ex) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Pow;
    e->kids = {std::move(a)};
    e->exponent = ex;
    return e;
}

ExprPtr Expr::sym_poly(UniPoly p) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::SymPoly;
    e->sym = std::move(p);
    return e;
}

Rational Expr::eval(std::uint32_t point, int n) const {
    switch (kind) {
        case Kind::Const: return constant;
        case Kind::Var: return Rational((point >> var_index) & 1U);
        case Kind::Add: return kids[0]->eval(point, n) + kids[1]->eval(point, n);
        case Kind::Sub: return kids[0]->eval(point, n) - kids[1]->eval(point, n);
        case Kind::Mul: return kids[0]->eval(point, n) * kids[1]->eval(point, n);
        case Kind::Pow: return pow_rational(kids[0]->eval(point, n), exponent);
        case Kind::SymPoly: return sym(Rational(std::popcount(point)));
    }
    throw std::logic_error("bad expr kind");
}

namespace {

MultilinearForm reduce_impl(const Expr& e, int n) {
    switch (e.kind) {
        case Expr::Kind::Const: {
            MultilinearForm f;
            if (e.constant != 0) f.terms.emplace(0U, e.constant);
            return f;
        }
        case Expr::Kind::Var: {
            MultilinearForm f;
            f.terms.emplace(1U << e.var_index, Rational(1));
            return f;
        }
        case Expr::Kind::Add:
            return ml_add(reduce_impl(*e.kids[0], n), reduce_impl(*e.kids[1], n));
        case Expr::Kind::Sub:
            return ml_add(reduce_impl(*e.kids[0], n), ml_scale(Rational(-1), reduce_impl(*e.kids[1], n)));
        case Expr::Kind::Mul:
            return ml_mul(reduce_impl(*e.kids[0], n), reduce_impl(*e.kids[1], n));
        case Expr::Kind::Pow: {
            MultilinearForm base = reduce_impl(*e.kids[0], n);
            MultilinearForm acc;
            acc.terms.emplace(0U, Rational(1));
            for (unsigned long i = 0; i < e.exponent; ++i) acc = ml_mul(acc, base);
            return acc;
        }
        case Expr::Kind::SymPoly: {
            MultilinearForm w;
            for (int i = 0; i < n; ++i) w.terms.emplace(1U << i, Rational(1));
            MultilinearForm acc;
            const auto& cs = e.sym.coeffs();
            for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
                acc = ml_mul(acc, w);
                if (*it != 0) {
                    MultilinearForm c;
                    c.terms.emplace(0U, *it);
                    acc = ml_add(acc, c);
                }
            }
            return acc;
        }
    }
    throw std::logic_error("bad expr kind");
}

}  // namespace

MultilinearForm reduce_mod_boolean(const ExprPtr& e, int n) {
    if (n < 1 || n > kEnumerationGuard) throw std::invalid_argument("reduce_mod_boolean: 1 <= n <= 20");
    return reduce_impl(*e, n);
}

EnumerateResult enumerate_check(ClaimKind claim, const ExprPtr& lhs, const ExprPtr& rhs, int n) {
    if (n < 1 || n > kEnumerationGuard) throw std::invalid_argument("enumerate_check: 1 <= n <= 20");
    EnumerateResult res;
    const std::uint32_t end = 1U << n;
    for (std::uint32_t point = 0; point < end; ++point) {
        Rational l = lhs->eval(point, n);
        if (claim == ClaimKind::Identity) {
            Rational r = rhs->eval(point, n);
            if (l != r) {
                res.holds = false;
                res.counterexample = point;
                res.lhs_at_counterexample = l;
                res.rhs_at_counterexample = r;
                return res;
            }
        } else {
            if (l < 0) {
                res.holds = false;
                res.counterexample = point;
                res.lhs_at_counterexample = l;
                res.rhs_at_counterexample = Rational(0);
                return res;
            }
        }
    }
    res.holds = true;
    return res;
}

ExprPtr expr_weight(int n) {
    ExprPtr acc = Expr::make_var(0);
    for (int i = 1; i < n; ++i) acc = Expr::add(acc, Expr::make_var(i));
    return acc;
}

}  // namespace soscert
