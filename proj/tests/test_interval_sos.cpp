#include <doctest.h>

#include <random>

#include "soscert/aberth.hpp"
#include "soscert/hypercube_oracle.hpp"
#include "soscert/interval_sos.hpp"

using namespace soscert;

namespace {

UniPoly x_poly() { return UniPoly{Rational(0), Rational(1)}; }

// Exact check that |p - assembled| stays within bound at sampled points.
void check_reassembly(const IntervalSosDecomposition& dec, int samples, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(0, 1L << 20);
    for (int i = 0; i < samples; ++i) {
        Rational x = dec.interval.lo + dec.interval.width() * Rational(num(rng), 1L << 20);
        Rational diff = abs_rational(dec.p(x) - dec.assembled(x));
        CHECK(diff <= dec.residual_bound);
    }
}

}  // namespace

TEST_CASE("aberth finds the roots of small polynomials") {
    // (x-1)(x-2)(x^2+1)
    UniPoly p = UniPoly::linear_root(Rational(1)) * UniPoly::linear_root(Rational(2)) *
                UniPoly{Rational(1), Rational(0), Rational(1)};
    auto roots = find_complex_roots(p, 96);
    REQUIRE(roots.size() == 4);
    int real_near_1 = 0, real_near_2 = 0, imag_pair = 0;
    Rational tol(1, 1L << 40);
    for (const auto& r : roots) {
        if (abs_rational(r.im) < tol && abs_rational(r.re - 1) < tol) ++real_near_1;
        if (abs_rational(r.im) < tol && abs_rational(r.re - 2) < tol) ++real_near_2;
        if (abs_rational(r.re) < tol && abs_rational(abs_rational(r.im) - 1) < tol) ++imag_pair;
    }
    CHECK(real_near_1 == 1);
    CHECK(real_near_2 == 1);
    CHECK(imag_pair == 2);
}

TEST_CASE("decompose: (x-1)^2 on [0,2] is exactly its own square") {
    UniPoly p = UniPoly::linear_root(Rational(1)) * UniPoly::linear_root(Rational(1));
    auto dec = decompose_on_interval(p, IntervalQ(Rational(0), Rational(2)), 64);
    CHECK(dec.even_parity);
    CHECK(dec.residual.is_zero());
    CHECK(dec.residual_bound == 0);
    CHECK(dec.assembled == p);
}

TEST_CASE("decompose: x on [0,2] goes to the odd form") {
    auto dec = decompose_on_interval(x_poly(), IntervalQ(Rational(0), Rational(2)), 64);
    CHECK_FALSE(dec.even_parity);
    CHECK(dec.residual.is_zero());
    CHECK(dec.assembled == x_poly());
}

TEST_CASE("decompose: 1 - x^2 on [-1,1] lands entirely in the weighted part") {
    UniPoly p = UniPoly::constant(1) - x_poly() * x_poly();
    auto dec = decompose_on_interval(p, IntervalQ(Rational(-1), Rational(1)), 64);
    CHECK(dec.even_parity);
    CHECK(dec.residual.is_zero());
    CHECK(dec.s_terms.empty());
    REQUIRE(dec.t_terms.size() == 1);
    CHECK(dec.t_terms[0].first == 1);
    CHECK(dec.t_terms[0].second == UniPoly::constant(1));
}

TEST_CASE("decompose: strictly positive polynomial with complex roots") {
    // (x^2+1)((x-3)^2 + 2) > 0 everywhere
    UniPoly p = UniPoly{Rational(1), Rational(0), Rational(1)} *
                (UniPoly::linear_root(Rational(3)) * UniPoly::linear_root(Rational(3)) + UniPoly::constant(2));
    auto dec = decompose_on_interval(p, IntervalQ(Rational(0), Rational(4)), 96);
    CHECK(dec.even_parity);
    CHECK(dec.residual_bound <= pow2_rational(-96) * coeff_norm_inf(p));
    check_reassembly(dec, 64, 11);
    // degree bookkeeping
    CHECK(dec.s_degree() <= 4);
    CHECK(dec.t_degree() <= 2);
}

TEST_CASE("decompose: roots outside the interval on both sides") {
    // (x+2)(x+1)(5-x)(6-x) >= 0 on [-1, 5]
    UniPoly p = UniPoly{Rational(2), Rational(1)} * UniPoly{Rational(1), Rational(1)} *
                UniPoly{Rational(5), Rational(-1)} * UniPoly{Rational(6), Rational(-1)};
    auto dec = decompose_on_interval(p, IntervalQ(Rational(-1), Rational(5)), 80);
    CHECK(dec.residual_bound <= pow2_rational(-80) * coeff_norm_inf(p));
    check_reassembly(dec, 64, 22);
}

TEST_CASE("decompose: odd degree mixed case") {
    // x(x^2 - 2x + 2) >= 0 on [0, 3]
    UniPoly p = x_poly() * UniPoly{Rational(2), Rational(-2), Rational(1)};
    auto dec = decompose_on_interval(p, IntervalQ(Rational(0), Rational(3)), 80);
    CHECK_FALSE(dec.even_parity);
    CHECK(dec.residual_bound <= pow2_rational(-80) * coeff_norm_inf(p));
    check_reassembly(dec, 64, 33);
    CHECK(dec.s_degree() <= 2 * ((p.degree() + 1) / 2));
}

TEST_CASE("decompose rejects polynomials that dip negative") {
    UniPoly p = UniPoly::linear_root(Rational(1, 2));
    CHECK_THROWS(decompose_on_interval(p, IntervalQ(Rational(0), Rational(1)), 64));
}

TEST_CASE("decompose a random certified-nonnegative product") {
    std::mt19937_64 rng(914);
    std::uniform_int_distribution<int> small(-4, 4);
    for (int trial = 0; trial < 6; ++trial) {
        // product of squares and positive quadratics
        UniPoly p = UniPoly::constant(Rational(1 + (trial % 3)));
        p = p * pow(UniPoly::linear_root(Rational(small(rng))), 2);
        p = p * UniPoly{Rational(1 + std::abs(small(rng))), Rational(small(rng)), Rational(1)};
        auto cert = prove_nonneg(p, IntervalQ(Rational(-5), Rational(5)));
        if (!cert.passed()) continue;  // quadratic may dip; skip those
        auto dec = decompose_on_interval(p, IntervalQ(Rational(-5), Rational(5)), 64);
        check_reassembly(dec, 32, 100 + static_cast<unsigned>(trial));
    }
}

TEST_CASE("lift special cases") {
    auto one = lift_nonneg_to_hypercube(UniPoly::constant(1), 4);
    CHECK(one->kind == EvidenceKind::Square);
    CHECK(check_evidence(one, 4).valid);
    CHECK(one->claimed_degree == 0);

    UniPoly xnx = x_poly() * (UniPoly::constant(4) - x_poly());
    auto prod = lift_nonneg_to_hypercube(xnx, 4);
    CHECK(prod->kind == EvidenceKind::Product);
    auto rep = check_evidence(prod, 4);
    CHECK(rep.valid);
    CHECK(rep.total_degree == 4);
    LevelVector lv = levels(prod->claimed_poly, 4);
    std::vector<long> expect{0, 3, 4, 3, 0};
    for (std::size_t j = 0; j < 5; ++j) CHECK(lv.values[j] == expect[j]);
}

TEST_CASE("lift of a positive parabola") {
    // (x-1)(x-2) + 1 has minimum 3/4 at x = 3/2
    UniPoly p = UniPoly::linear_root(Rational(1)) * UniPoly::linear_root(Rational(2)) + UniPoly::constant(1);
    CHECK(p(Rational(3, 2)) == Rational(3, 4));
    auto e = lift_nonneg_to_hypercube(p, 6, 96, true);
    CHECK(e->kind == EvidenceKind::IntervalNonnegLift);
    REQUIRE(e->lift_payload.has_value());
    auto rep = check_evidence(e, 6);
    CHECK(rep.valid);
    CHECK(rep.total_degree == p.degree() + 2);
}

TEST_CASE("lift failure propagates the witness") {
    UniPoly p = UniPoly::linear_root(Rational(2));  // x - 2 dips below 0 on [0,n]
    CHECK_THROWS_WITH_AS(lift_nonneg_to_hypercube(p, 5), doctest::Contains("x = 0"), std::runtime_error);
}

TEST_CASE("lift evidence round-trips through check_evidence for a corpus") {
    std::vector<UniPoly> corpus;
    corpus.push_back(UniPoly::constant(Rational(7, 3)));
    corpus.push_back(pow(UniPoly::linear_root(Rational(2)), 2) + UniPoly::constant(Rational(1, 2)));
    corpus.push_back(x_poly() * (UniPoly::constant(6) - x_poly()) + UniPoly::constant(1));
    for (const auto& p : corpus) {
        auto e = lift_nonneg_to_hypercube(p, 6, 80, true);
        CHECK(check_evidence(e, 6).valid);
    }
}
