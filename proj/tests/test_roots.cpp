#include <doctest.h>

#include <random>

#include "soscert/roots.hpp"

using namespace soscert;

namespace {

UniPoly from_ints(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

// Independent root counter: interval-arithmetic pruned subdivision down to
// width 2^-40, counting sign changes of the square-free part.
long bisection_count_open(const UniPoly& sf, const Rational& lo, const Rational& hi, int depth = 0) {
    IntervalQ seg(lo, hi);
    IntervalQ range = interval_bound(sf, seg, 64);
    if (range.lo > 0 || range.hi < 0) return 0;  // no zero in the segment
    if (depth >= 40) {
        // Narrow segment: decide by endpoint signs.
        return sign(sf(lo)) * sign(sf(hi)) < 0 ? 1 : 0;
    }
    Rational mid = seg.mid();
    long total = bisection_count_open(sf, lo, mid, depth + 1) + bisection_count_open(sf, mid, hi, depth + 1);
    if (sf(mid) == 0 && lo < mid && mid < hi) total += 1;
    return total;
}

}  // namespace

TEST_CASE("sturm counts the spec examples") {
    // sqrt(2) in (0, 2]
    auto c1 = sturm_count_roots(from_ints({-2, 0, 1}), IntervalQ(Rational(0), Rational(2)));
    CHECK(c1.root_count == 1);
    CHECK(c1.verdict == SignVerdict::RootCount);

    // (x-1)^2: one distinct root, multiplicity 2
    auto c2 = sturm_count_roots(from_ints({1, -2, 1}), IntervalQ(Rational(0), Rational(2)));
    CHECK(c2.root_count == 1);
    REQUIRE(c2.multiplicity_counts.size() == 1);
    CHECK(c2.multiplicity_counts[0].first == 2);
    CHECK(c2.multiplicity_counts[0].second == 1);

    // T_3 has all three roots inside (-1, 1]
    auto c3 = sturm_count_roots(chebyshev_T(3), IntervalQ(Rational(-1), Rational(1)));
    CHECK(c3.root_count == 3);
}

TEST_CASE("half-open convention: left endpoint excluded, right included") {
    UniPoly p = UniPoly::linear_root(Rational(0)) * UniPoly::linear_root(Rational(1));
    auto left = sturm_count_roots(p, IntervalQ(Rational(0), Rational(1)));
    CHECK(left.root_count == 1);  // root at 0 excluded, root at 1 included
    auto wide = sturm_count_roots(p, IntervalQ(Rational(-1), Rational(1)));
    CHECK(wide.root_count == 2);
    auto cd = descartes_count_roots(p, IntervalQ(Rational(0), Rational(1)));
    CHECK(cd.root_count == 1);
    auto cd2 = descartes_count_roots(p, IntervalQ(Rational(-1), Rational(1)));
    CHECK(cd2.root_count == 2);
}

TEST_CASE("descartes agrees with sturm on random small polynomials") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> degd(1, 20);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Rational> cs(static_cast<std::size_t>(degd(rng)) + 1);
        for (auto& c : cs) c = Rational(coeff(rng));
        UniPoly p(std::move(cs));
        if (p.is_zero()) continue;
        Rational B(20);
        auto a = sturm_count_roots(p, IntervalQ(-B, B));
        auto b = descartes_count_roots(p, IntervalQ(-B, B));
        CHECK(a.root_count == b.root_count);
    }
}

TEST_CASE("sturm count equals exhaustive bisection refinement") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<int> degd(1, 12);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> cs(static_cast<std::size_t>(degd(rng)) + 1);
        for (auto& c : cs) c = Rational(coeff(rng));
        UniPoly p(std::move(cs));
        if (p.is_zero() || p.is_constant()) continue;
        auto iso = isolate_roots_open(p, IntervalQ(Rational(-100), Rational(100)));
        const UniPoly& sf = iso.squarefree;
        if (sf.is_constant()) continue;
        Rational B(8);
        long oracle = bisection_count_open(sf, -B, B, 0);
        if (sf(-B) == 0 || sf(B) == 0) continue;  // oracle convention differs at exact endpoints
        auto cert = sturm_count_roots(p, IntervalQ(-B, B));
        CHECK(cert.root_count == oracle);
    }
}

TEST_CASE("prove_nonneg spec examples") {
    // (x-1)^2 on [0,3]
    auto c1 = prove_nonneg(from_ints({1, -2, 1}), IntervalQ(Rational(0), Rational(3)));
    CHECK(c1.verdict == SignVerdict::Nonnegative);

    // x - 2 on [0,3] fails with witness at 0
    auto c2 = prove_nonneg(from_ints({-2, 1}), IntervalQ(Rational(0), Rational(3)));
    CHECK(c2.verdict == SignVerdict::Falsified);
    REQUIRE(c2.witness.has_value());
    CHECK(*c2.witness == 0);

    // -(x-1)(x-2) nonnegative between its roots
    UniPoly q2 = UniPoly::linear_root(Rational(1)) * UniPoly::linear_root(Rational(2));
    auto c3 = prove_nonneg(-q2, IntervalQ(Rational(1), Rational(2)));
    CHECK(c3.verdict == SignVerdict::Nonnegative);
}

TEST_CASE("prove_nonneg catches interior dips without odd roots") {
    // -x^2 (1-x)^2 is zero at both endpoints, negative inside.
    UniPoly x = UniPoly::linear_root(Rational(0));
    UniPoly one_m_x = UniPoly::constant(1) - x;
    UniPoly p = Rational(-1) * (x * x) * (one_m_x * one_m_x);
    auto c = prove_nonneg(p, IntervalQ(Rational(0), Rational(1)));
    CHECK(c.verdict == SignVerdict::Falsified);
    REQUIRE(c.witness.has_value());
    CHECK(p(*c.witness) < 0);
}

TEST_CASE("prove_nonneg finds interior sign-change witnesses") {
    // (x - 1/3)(x - 2/3) dips below zero between the roots.
    UniPoly p = UniPoly::linear_root(Rational(1, 3)) * UniPoly::linear_root(Rational(2, 3));
    auto c = prove_nonneg(p, IntervalQ(Rational(0), Rational(1)));
    CHECK(c.verdict == SignVerdict::Falsified);
    REQUIRE(c.witness.has_value());
    CHECK(p(*c.witness) < 0);
}

TEST_CASE("squares are always nonnegative") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> coeff(-8, 8);
    std::uniform_int_distribution<int> degd(0, 9);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> cs(static_cast<std::size_t>(degd(rng)) + 1);
        for (auto& c : cs) c = Rational(coeff(rng), 1 + (trial % 3));
        UniPoly p(std::move(cs));
        if (p.is_zero()) continue;
        auto cert = prove_nonneg(p * p, IntervalQ(Rational(-7), Rational(9)));
        CHECK(cert.verdict == SignVerdict::Nonnegative);
    }
}

TEST_CASE("strict positivity") {
    UniPoly p = from_ints({1, 0, 1});  // x^2 + 1
    CHECK(prove_nonneg(p, IntervalQ(Rational(-5), Rational(5)), true).verdict == SignVerdict::Positive);
    UniPoly touch = from_ints({0, 0, 1});  // x^2 touches zero
    auto c = prove_nonneg(touch, IntervalQ(Rational(-1), Rational(1)), true);
    CHECK(c.verdict == SignVerdict::Falsified);
    CHECK(prove_nonneg(touch, IntervalQ(Rational(-1), Rational(1)), false).verdict == SignVerdict::Nonnegative);
}

TEST_CASE("interval_bound encloses sampled values") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coeff(-5, 5);
    UniPoly p{Rational(1), Rational(-3), Rational(0), Rational(2)};
    IntervalQ I(Rational(-2), Rational(3));
    IntervalQ e = interval_bound(p, I, 64);
    std::uniform_int_distribution<long> num(0, 1024);
    for (int i = 0; i < 100; ++i) {
        Rational x = I.lo + I.width() * Rational(num(rng), 1024);
        Rational v = p(x);
        CHECK(v >= e.lo);
        CHECK(v <= e.hi);
    }
    (void)coeff;
}

TEST_CASE("interval_bound spec cases") {
    UniPoly sq = from_ints({0, 0, 1});
    IntervalQ e = interval_bound(sq, IntervalQ(Rational(-1), Rational(1)), 32);
    CHECK(e.lo <= 0);
    CHECK(e.hi >= 1);

    IntervalQ c = interval_bound(UniPoly::constant(5), IntervalQ(Rational(-3), Rational(11)), 16);
    CHECK(c.lo == 5);
    CHECK(c.hi == 5);

    IntervalQ t10 = interval_bound(chebyshev_T(10), IntervalQ(Rational(-1), Rational(1)), 64);
    CHECK(t10.lo <= -1);
    CHECK(t10.hi >= 1);
    // Extremal values of T_10 on [-1,1] are exactly +-1: dense check.
    for (long j = -32; j <= 32; ++j) {
        Rational v = chebyshev_T(10)(Rational(j, 32));
        CHECK(v >= -1);
        CHECK(v <= 1);
    }
}

TEST_CASE("refine_root narrows a bracket") {
    UniPoly p = from_ints({-2, 0, 1});  // sqrt(2)
    auto iso = isolate_roots_open(p, IntervalQ(Rational(0), Rational(2)));
    REQUIRE(iso.boxes.size() == 1);
    RootBox b = refine_root(iso.squarefree, iso.boxes[0], Rational(1, 1L << 40));
    if (!b.exact) {
        CHECK(b.hi - b.lo <= Rational(1, 1L << 40));
        CHECK(b.lo * b.lo <= 2);
        CHECK(b.hi * b.hi >= 2);
    }
}

TEST_CASE("zero polynomial is rejected") {
    CHECK_THROWS(sturm_count_roots(UniPoly::zero(), IntervalQ(Rational(0), Rational(1))));
    CHECK_THROWS(prove_nonneg(UniPoly::zero(), IntervalQ(Rational(0), Rational(1))));
}
