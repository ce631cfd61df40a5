#include <doctest.h>

#include "soscert/unipoly.hpp"

using namespace soscert;

namespace {
UniPoly x_poly() { return UniPoly{Rational(0), Rational(1)}; }
}  // namespace

TEST_CASE("difference of squares") {
    UniPoly xp1{Rational(1), Rational(1)};
    UniPoly xm1{Rational(-1), Rational(1)};
    CHECK(xp1 * xm1 == UniPoly{Rational(-1), Rational(0), Rational(1)});
}

TEST_CASE("additive identity") {
    UniPoly p{Rational(3), Rational(0), Rational(7, 2)};
    CHECK(p + UniPoly::zero() == p);
    CHECK(UniPoly::zero() + p == p);
}

TEST_CASE("cube of x-2 via multiplication") {
    UniPoly f = UniPoly::linear_root(Rational(2));
    UniPoly sq = f * f;
    UniPoly cube = sq * f;
    CHECK(cube == UniPoly{Rational(-8), Rational(12), Rational(-6), Rational(1)});
}

TEST_CASE("degree bookkeeping") {
    UniPoly p{Rational(1), Rational(2)};
    UniPoly q{Rational(-1), Rational(-2)};
    CHECK((p + q).is_zero());
    CHECK((p * q).degree() == 2);
    CHECK(p.degree() == 1);
}

TEST_CASE("compose basics") {
    UniPoly sq{Rational(0), Rational(0), Rational(1)};
    UniPoly xm1{Rational(-1), Rational(1)};
    CHECK(compose(sq, xm1) == UniPoly{Rational(1), Rational(-2), Rational(1)});

    UniPoly t2 = chebyshev_T(2);
    CHECK(compose(t2, x_poly()) == t2);

    // T_2 at the right endpoint of [0,4] through the affine map 2x/4 - 1.
    UniPoly inner{Rational(-1), Rational(1, 2)};
    UniPoly c = compose(t2, inner);
    CHECK(c(Rational(4)) == 1);
    CHECK(c.degree() == 2);
}

TEST_CASE("chebyshev first kind") {
    CHECK(chebyshev_T(0) == UniPoly::constant(1));
    CHECK(chebyshev_T(2) == UniPoly{Rational(-1), Rational(0), Rational(2)});
    CHECK(chebyshev_T(3) == UniPoly{Rational(0), Rational(-3), Rational(0), Rational(4)});
    for (unsigned d = 0; d <= 64; ++d) {
        UniPoly t = chebyshev_T(d);
        CHECK(t(Rational(1)) == 1);
        CHECK(t(Rational(-1)) == (d % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("chebyshev second kind and derivative identity") {
    CHECK(chebyshev_U(1) == UniPoly{Rational(0), Rational(2)});
    CHECK(chebyshev_U(2) == UniPoly{Rational(-1), Rational(0), Rational(4)});
    CHECK(derivative(chebyshev_T(5)) == Rational(5) * chebyshev_U(4));
    for (unsigned d = 1; d <= 64; ++d) {
        CHECK(derivative(chebyshev_T(d)) == Rational(d) * chebyshev_U(d - 1));
    }
}

TEST_CASE("chebyshev bounded on the grid") {
    for (unsigned d : {1u, 2u, 5u, 17u, 33u, 64u}) {
        UniPoly t = chebyshev_T(d);
        for (long j = -64; j <= 64; ++j) {
            Rational x(j, 64);
            Rational v = t(x);
            CHECK(abs_rational(v) <= 1);
        }
    }
}

TEST_CASE("derivative basics") {
    CHECK(derivative(UniPoly{Rational(4), Rational(-4), Rational(1)}) == UniPoly{Rational(-4), Rational(2)});
    CHECK(derivative(UniPoly::constant(9)).is_zero());
    CHECK(derivative(chebyshev_T(4)) == Rational(4) * chebyshev_U(3));
}

TEST_CASE("divrem and exact division") {
    UniPoly p{Rational(-8), Rational(12), Rational(-6), Rational(1)};  // (x-2)^3
    UniPoly d = UniPoly::linear_root(Rational(2));
    auto [q, r] = divrem(p, d);
    CHECK(r.is_zero());
    CHECK(q == d * d);
    auto [q2, r2] = divrem(p, UniPoly{Rational(1), Rational(1)});
    CHECK(q2 * UniPoly{Rational(1), Rational(1)} + r2 == p);
    CHECK(root_multiplicity(p, Rational(2)) == 3);
    CHECK(root_multiplicity(p, Rational(1)) == 0);
}

TEST_CASE("pow by repeated squaring") {
    UniPoly b{Rational(1), Rational(1)};
    UniPoly p5 = pow(b, 5);
    CHECK(p5.degree() == 5);
    CHECK(p5(Rational(1)) == 32);
    CHECK(pow(b, 0) == UniPoly::constant(1));
}

TEST_CASE("evaluation is exact") {
    UniPoly p{Rational(1, 3), Rational(-2, 7), Rational(1)};
    Rational v = p(Rational(5, 11));
    CHECK(v == Rational(1, 3) + Rational(-2, 7) * Rational(5, 11) + Rational(25, 121));
}
