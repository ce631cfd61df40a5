#ifndef SOSCERT_HYPERCUBE_ORACLE_HPP
#define SOSCERT_HYPERCUBE_ORACLE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "soscert/rational.hpp"
#include "soscert/unipoly.hpp"

namespace soscert {

// Value of a symmetric function at each Hamming weight 0..n.
struct LevelVector {
    std::vector<Rational> values;  // index j = value at |x| = j
    long n() const { return static_cast<long>(values.size()) - 1; }
};

// Exact evaluation of p at x = 0..n.
LevelVector levels(const UniPoly& p, long n);

// Canonical multilinear normal form modulo the Boolean axioms x_i^2 = x_i:
// subsets of [n] (bitmask) -> coefficient, zero coefficients removed.
struct MultilinearForm {
    std::map<std::uint32_t, Rational> terms;

    bool operator==(const MultilinearForm& o) const { return terms == o.terms; }
    Rational eval(std::uint32_t point) const;
};

MultilinearForm ml_add(const MultilinearForm& a, const MultilinearForm& b);
MultilinearForm ml_scale(const Rational& c, const MultilinearForm& a);
MultilinearForm ml_mul(const MultilinearForm& a, const MultilinearForm& b);

// Multivariate expression tree over x_1..x_n: the enumeration input. Products
// are kept as trees so enumeration never expands them.
class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
  public:
    enum class Kind { Const, Var, Add, Sub, Mul, Pow, SymPoly };

    Kind kind;
    Rational constant;       // Const
    int var_index = -1;      // Var (0-based)
    std::vector<ExprPtr> kids;
    unsigned long exponent = 0;  // Pow
    UniPoly sym;             // SymPoly: evaluated at |x|

    static ExprPtr make_const(Rational c);
    static ExprPtr make_var(int i);
    static ExprPtr add(ExprPtr a, ExprPtr b);
    static ExprPtr sub(ExprPtr a, ExprPtr b);
    static ExprPtr mul(ExprPtr a, ExprPtr b);
    static ExprPtr pow(ExprPtr a, unsigned long e);
    static ExprPtr sym_poly(UniPoly p);

    // Exact value at a 0/1 point given as a bitmask.
    Rational eval(std::uint32_t point, int n) const;
};

inline constexpr int kEnumerationGuard = 20;

// Multilinear normal form; n <= 20 guard.
MultilinearForm reduce_mod_boolean(const ExprPtr& e, int n);

struct EnumerateResult {
    bool holds = false;
    std::optional<std::uint32_t> counterexample;  // first failing point, lexicographic
    Rational lhs_at_counterexample;
    Rational rhs_at_counterexample;
};

enum class ClaimKind { Identity, Nonnegativity };

// Exhaustive check over all 2^n points; rhs ignored for nonnegativity claims
// (uses 0). n <= 20 guard.
EnumerateResult enumerate_check(ClaimKind claim, const ExprPtr& lhs, const ExprPtr& rhs, int n);

// Convenience: sum of variables, symmetric lift helpers.
ExprPtr expr_weight(int n);  // x_1 + ... + x_n

}  // namespace soscert

#endif
