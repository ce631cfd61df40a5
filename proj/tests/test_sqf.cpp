#include <doctest.h>

#include <random>

#include "soscert/enclosures.hpp"
#include "soscert/hypercube_oracle.hpp"
#include "soscert/sqf_cert.hpp"

using namespace soscert;

TEST_CASE("g for k=2 collapses to x^(e+1)(x-3)^(e+1)") {
    UniPoly g = build_g(2, 32);
    UniPoly expect = pow(UniPoly{Rational(0), Rational(1)}, 33) * pow(UniPoly::linear_root(Rational(3)), 33);
    CHECK(g == expect);
    CHECK(g(Rational(1)) < 0);  // even k: g(k-1) < 0
}

TEST_CASE("g(k-1) sign by parity") {
    CHECK(build_g(3, 48)(Rational(2)) > 0);
    CHECK(build_g(4, 8)(Rational(3)) < 0);
    CHECK(build_g(5, 4)(Rational(4)) > 0);
}

TEST_CASE("g symmetry about (2k-1)/2 is a coefficient identity") {
    for (long k = 2; k <= 8; ++k) {
        for (long e : {2L, 16 * k}) {
            UniPoly g = build_g(k, e);
            UniPoly mirror = compose(g, UniPoly{Rational(2 * k - 1), Rational(-1)});
            CHECK(g == mirror);
        }
    }
}

TEST_CASE("ratio lemma instances with exponential enclosures") {
    for (long k = 3; k <= 6; ++k) {
        UniPoly a_k = UniPoly::constant(1);
        for (long i = 0; i <= 2 * k - 1; ++i) {
            if (i == k - 1 || i == k) continue;
            a_k = a_k * UniPoly::linear_root(Rational(i));
        }
        UniPoly b_k = UniPoly{Rational(0), Rational(1)} * UniPoly{Rational(2 * k - 1), Rational(-1)};
        for (long m = 1; m <= k - 2; ++m) {
            Rational ub_a = exp_enclosure(Rational(16 * m * m, k), 96).hi;
            Rational lb_b = exp_enclosure(Rational(-m * m, k * k), 96).lo;
            for (int s = 1; s <= 32; ++s) {
                Rational x = Rational(k - 2) + Rational(s, 33);  // inside (k-2, k-1)
                Rational shifted = x - Rational(m);
                CHECK(abs_rational(a_k(shifted)) <= ub_a * abs_rational(a_k(x)));
                CHECK(abs_rational(b_k(shifted)) <= lb_b * abs_rational(b_k(x)));
            }
        }
    }
}

TEST_CASE("g ratio corollary via prove_nonneg") {
    for (long k = 3; k <= 5; ++k) {
        UniPoly g = build_g(k, 2);
        for (long m = 1; m <= k - 2; ++m) {
            UniPoly shifted = compose(g, UniPoly{Rational(-m), Rational(1)});
            auto cert = prove_nonneg(g * g - shifted * shifted, IntervalQ(Rational(k - 2), Rational(k - 1)));
            CHECK(cert.passed());
        }
    }
}

TEST_CASE("s1 vanishes at k-1 and k; k=1 shortcut") {
    CHECK(build_s1(10, 1, 2) == UniPoly{Rational(0), Rational(-1), Rational(1)});
    for (long k : {2L, 3L, 4L}) {
        UniPoly s1 = build_s1(12, k, 2 * k);
        CHECK(s1(Rational(k - 1)) == 0);
        CHECK(s1(Rational(k)) == 0);
    }
    UniPoly s1_48 = build_s1(12, 3, 48);
    CHECK(s1_48(Rational(2)) == 0);
    CHECK(s1_48(Rational(3)) == 0);
}

TEST_CASE("search-mode ratio at the midpoint for k=2") {
    // ratio r(3/2) = s1/q at 3/2 must be >= 1 (the g-lemma in action)
    UniPoly s1 = build_s1(10, 2, 4);
    UniPoly r = exact_div(s1, sqf_target(2));
    CHECK(r(Rational(3, 2)) >= 1);
}

TEST_CASE("s1 conditions certify with theory exponents for small k") {
    for (auto [n, k] : {std::pair<long, long>{10, 2}, {12, 3}}) {
        UniPoly s1 = build_s1(n, k, 16 * k);
        Rational B = pow_rational(Rational(n), static_cast<unsigned long>(40 * k));
        auto reports = verify_s1_conditions(n, k, s1, B);
        for (const auto& rep : reports) {
            INFO(rep.name);
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("s1 conditions for k=1 are trivial") {
    UniPoly s1 = build_s1(8, 1, 2);
    auto reports = verify_s1_conditions(8, 1, s1, pow_rational(Rational(8), 40));
    for (const auto& rep : reports) CHECK(rep.pass);
}

TEST_CASE("H basics") {
    UniPoly H = build_H(16, 2, 3);
    CHECK(H(Rational(3)) == 1);  // H(2k-1) = 1 exactly
    CHECK(H(Rational(16)) <= 1);
    CHECK(H(Rational(2)) >= Rational(3, 2));
    // frozen exact values for (16,2,3): H(16) = T_3(5/8)^2 = 13225/16384
    CHECK(H(Rational(16)) == Rational(13225, 16384));
    CHECK(H(Rational(2)) == Rational(88209, 16384));
}

TEST_CASE("H properties certify on the sampled instances") {
    Rational C = upper_e_8_sqrt3(128);
    for (auto [n, k] : {std::pair<long, long>{16, 2}, {8, 4}, {24, 3}}) {
        long d_H = static_cast<long>(ceil_sqrt_ratio(Integer(n), Integer(k)).get_si());
        UniPoly H = build_H(n, k, d_H);
        auto rep = verify_H_properties(n, k, H, C);
        INFO("n=" << n << " k=" << k);
        CHECK(rep.all_pass());
        CHECK(rep.a == H(Rational(k)));
        CHECK(rep.b == H(Rational(k - 1)));
    }
}

TEST_CASE("H(0) stays under the e^(8 sqrt 3) constant at n=100, k=2") {
    UniPoly H = build_H(100, 2, 8);
    Rational C = upper_e_8_sqrt3(128);
    CHECK(H(Rational(0)) <= C);
    // cosh(8 acosh(1.06))^2 ~ 62.9
    CHECK(H(Rational(0)) > Rational(62));
    CHECK(H(Rational(0)) < Rational(63));
}

TEST_CASE("p_abc basics and properties at a small sample") {
    Rational a(3, 2), b(2), C(3);
    UniPoly p = build_p_abc(a, b, C, 36);
    CHECK(p(a) == 1);  // the quadratic vanishes at a
    auto ge1 = prove_nonneg(p - UniPoly::constant(1), IntervalQ(a, b));
    CHECK(ge1.passed());
    auto le_half_hi = prove_nonneg(UniPoly::constant(Rational(1, 2)) - p, IntervalQ(Rational(0), Rational(1)));
    auto le_half_lo = prove_nonneg(p + UniPoly::constant(Rational(1, 2)), IntervalQ(Rational(0), Rational(1)));
    CHECK(le_half_hi.passed());
    CHECK(le_half_lo.passed());
    for (const auto& I : {IntervalQ(Rational(0), a), IntervalQ(b, C)}) {
        CHECK(prove_nonneg(UniPoly::constant(1) - p, I).passed());
        CHECK(prove_nonneg(p + UniPoly::constant(1), I).passed());
    }
    CHECK_THROWS(build_p_abc(Rational(1), b, C, 4));   // a < 3/2
    CHECK_THROWS(build_p_abc(a, Rational(4), C, 4));   // b >= C
}

TEST_CASE("s2 conditions re-verified directly on a small search instance") {
    SqfParams par;
    par.n = 16;
    par.k = 2;
    par.mode = SqfMode::Search;
    par.e_g = 2;
    par.d_H = 2;
    par.e_p = 2;
    par.m_s2 = 2;
    UniPoly H = build_H(16, 2, 2);
    par.C = default_search_C(H, H(Rational(2)), H(Rational(1)));
    UniPoly s2 = build_s2(16, 2, par);
    // bound chosen for this scale: the combined-inequality reading
    auto reports = verify_s2_conditions(16, 2, s2, Rational(1));
    CHECK(reports[0].pass);  // >= 1 inside
    CHECK(reports[1].pass);  // <= 1 on the flanks
}

TEST_CASE("proposition soundness at a custom outer bound") {
    // Whenever all interval conditions certify with a common bound B, the
    // assembled final check must also certify.
    const long n = 6, k = 2;
    UniPoly s1 = build_s1(n, k, 2);
    UniPoly r = exact_div(s1, sqf_target(k));
    // B must dominate |r| on [2k-1, n]
    Rational B(0);
    for (Rational x(2 * k - 1); x <= Rational(n); x += Rational(1, 8)) {
        B = std::max(B, abs_rational(r(x)));
    }
    B = B + 1;
    auto s1_reports = verify_s1_conditions(n, k, s1, B);
    for (const auto& rep : s1_reports) {
        INFO(rep.name);
        CHECK(rep.pass);
    }
    // grow the s2 exponent until its three conditions certify against 1/B
    UniPoly H = build_H(n, k, 2);
    SqfParams par;
    par.n = n;
    par.k = k;
    par.mode = SqfMode::Search;
    par.e_g = 2;
    par.d_H = 2;
    par.m_s2 = 2;
    par.C = default_search_C(H, H(Rational(k)), H(Rational(k - 1)));
    bool conditions_met = false;
    for (long e_p = 8; e_p <= 96 && !conditions_met; e_p += 8) {
        par.e_p = e_p;
        UniPoly s2 = build_s2(n, k, par);
        auto reps = verify_s2_conditions(n, k, s2, B);
        conditions_met = reps[0].pass && reps[1].pass && reps[2].pass;
        if (conditions_met) {
            SqfCertificate cert = assemble_sqf_certificate(n, k, par);
            CHECK(cert.passed);  // the proposition: conditions imply the final check
        }
    }
    CHECK(conditions_met);
}

TEST_CASE("assemble k=1 gives the exact zero difference") {
    SqfParams par;
    auto cert = assemble_sqf_certificate(9, 1, par);
    CHECK(cert.passed);
    CHECK(cert.final_is_zero);
    CHECK(cert.total_degree == 2);
    CHECK(check_evidence(cert.evidence_qk, 9).valid);
    LevelVector lv = levels(cert.s, 5);
    std::vector<long> expect{0, 0, 2, 6, 12, 20};
    for (std::size_t j = 0; j < expect.size(); ++j) CHECK(lv.values[j] == expect[j]);
}

TEST_CASE("end-to-end search at a small instance") {
    SqfCertificate cert = search_sqf_certificate(16, 2);
    REQUIRE(cert.passed);
    CHECK(cert.final_check.passed());
    for (const auto& margin : cert.level_margins) CHECK(margin >= 0);
    auto rep = check_evidence(cert.evidence_qk, 16);
    INFO(rep.failing_path << ": " << rep.message);
    CHECK(rep.valid);
    CHECK(cert.evidence_s->claimed_poly == cert.s);
    CHECK(cert.total_degree == cert.s.degree());
    CHECK(cert.total_degree == cert.evidence_s->claimed_degree);
}

TEST_CASE("theory mode verifies factor lemmas without materializing s2") {
    SqfCertificate cert = assemble_sqf_certificate(12, 2, theory_params(12, 2));
    CHECK(cert.passed);
    CHECK(cert.s2.is_zero());
    CHECK(cert.theory_degree > Integer(1000000));
    bool saw_outer = false;
    for (const auto& c : cert.condition_reports) {
        INFO(c.name);
        CHECK(c.pass);
        if (c.anchor == "sqf.s2.factored.outer") saw_outer = true;
    }
    CHECK(saw_outer);
}

TEST_CASE("shifted-root identity") {
    SqfParams par;
    auto base = assemble_sqf_certificate(8, 1, par);

    // a = b = k collapses to the single square
    auto e1 = certificate_for_shifted_roots(8, 1, Rational(1), Rational(1), base);
    CHECK(e1->claimed_poly == UniPoly::linear_root(Rational(1)) * UniPoly::linear_root(Rational(1)));
    CHECK(check_evidence(e1, 8).valid);

    // a = k-1, b = k gives exactly q_k
    auto e2 = certificate_for_shifted_roots(8, 1, Rational(0), Rational(1), base);
    CHECK(e2->claimed_poly == sqf_target(1));
    CHECK(check_evidence(e2, 8).valid);

    // random triples: identity holds coefficientwise
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<long> num(0, 64);
    for (int trial = 0; trial < 100; ++trial) {
        long k = 1 + (trial % 3);
        SqfParams p2;
        auto base_k = assemble_sqf_certificate(10, 1, p2);
        if (k > 1) continue;  // identity checked against the k=1 base here
        Rational a = Rational(k - 1) + Rational(num(rng), 64);
        Rational b = Rational(k - 1) + Rational(num(rng), 64);
        if (a > b) std::swap(a, b);
        auto ev = certificate_for_shifted_roots(10, k, a, b, base_k);
        CHECK(ev->claimed_poly == UniPoly::linear_root(a) * UniPoly::linear_root(b));
    }
}

TEST_CASE("q_2 levels dominate s at n=5 (frozen values)") {
    LevelVector lv = levels(sqf_target(2), 5);
    std::vector<long> expect{2, 0, 0, 2, 6, 12};
    for (std::size_t j = 0; j < expect.size(); ++j) CHECK(lv.values[j] == expect[j]);
}
