#include <doctest.h>

#include "soscert/knapsack_cert.hpp"

using namespace soscert;

TEST_CASE("choose_params fixes d and alpha as stated") {
    MkParams p = choose_params(100, Rational(2));
    CHECK(p.d == 30);
    CHECK(p.alpha == Rational(1, 1800));
    CHECK(p.m % 2 == 0);
    CHECK(p.m >= 2);

    MkParams p25 = choose_params(25, Rational(2));
    CHECK(p25.d == 15);
    CHECK(p25.alpha == Rational(1, 450));
}

TEST_CASE("stilde has an exact root at the shifted point") {
    MkParams par;
    UniPoly s = build_stilde(25, 15, Rational(1, 450), 4, 96, 0, &par);
    CHECK(s(Rational(1)) == 0);
    CHECK(s.degree() == 60);
    CHECK(par.r0_hat >= par.r0_enclosure.lo);
    // offset 1 (the set-cover shape): root moves to x = 2
    UniPoly s_off = build_stilde(25, 15, Rational(1, 450), 4, 96, 1);
    CHECK(s_off(Rational(2)) == 0);
}

TEST_CASE("stilde(0) clears P at the oracle-minimal even exponent") {
    long m = oracle_minimal_m(25, Rational(2));
    CHECK(m % 2 == 0);
    MkParams par = choose_params(25, Rational(2));
    UniPoly s = build_stilde(25, par.d, par.alpha, m, 96, 0);
    CHECK(s(Rational(0)) > 2);
    if (m > 2) {
        UniPoly s_small = build_stilde(25, par.d, par.alpha, m - 2, 96, 0);
        CHECK_FALSE(s_small(Rational(0)) > 2);
    }
}

TEST_CASE("the formula m dominates the oracle-minimal m") {
    for (long n : {25L, 49L}) {
        MkParams par = choose_params(n, Rational(2));
        long oracle = oracle_minimal_m(n, Rational(2));
        CHECK(par.m >= oracle);
    }
}

TEST_CASE("three strengthened conditions certify at n=25, P=2") {
    MkParams par = choose_params(25, Rational(2));
    UniPoly s = build_stilde(25, par.d, par.alpha, par.m, 128, 0, &par);
    auto reports = verify_mk_conditions(25, Rational(2), s);
    REQUIRE(reports.size() == 3);
    for (const auto& r : reports) {
        INFO(r.name);
        CHECK(r.pass);
    }
}

TEST_CASE("multiplier properties hold in rationalized form") {
    MkParams par = choose_params(25, Rational(2));
    UniPoly s = build_stilde(25, par.d, par.alpha, par.m, 128, 0, &par);
    auto props = verify_stilde_properties(25, par, s);
    for (const auto& r : props) {
        INFO(r.name);
        CHECK(r.pass);
    }
}

TEST_CASE("end-to-end certificate at n=25, P=2") {
    MkCertificate cert = assemble_mk_certificate(25, Rational(2), 128);
    REQUIRE(cert.passed);
    // even root count, expected 2: the interior crossing plus the pinned root
    CHECK(cert.root_pairs.size() == 1);
    CHECK(cert.stilde0(Rational(0)) > 0);
    CHECK(cert.stilde0(Rational(1)) == 0);
    // pairs live in (0, 1]
    for (const auto& [a, b] : cert.root_pairs) {
        CHECK(a.lo >= 0);
        CHECK(b.hi <= 1);
        CHECK(a.lo <= b.hi);
    }
    // degree budget: d*m + 4
    CHECK(cert.total_degree <= cert.params.d * cert.params.m + 4);
    // evidence reassembles stilde0 within the declared residual at the levels
    REQUIRE(cert.evidence);
    for (long j = 0; j <= 25; ++j) {
        Rational diff = abs_rational(cert.evidence->claimed_poly(Rational(j)) - cert.stilde0(Rational(j)));
        CHECK(diff <= cert.pairing_residual_bound);
    }
    auto rep = check_evidence(cert.evidence, 25, EvidenceCheckOptions{false});
    INFO(rep.failing_path << ": " << rep.message);
    CHECK(rep.valid);
}

TEST_CASE("larger P needs a larger m") {
    MkParams p2 = choose_params(25, Rational(2));
    MkParams p1000 = choose_params(25, Rational(1000));
    CHECK(p1000.m >= p2.m);
}
