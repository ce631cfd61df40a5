#include <doctest.h>

#include "soscert/hypercube_oracle.hpp"
#include "soscert/sos_evidence.hpp"

using namespace soscert;

namespace {
UniPoly x_poly() { return UniPoly{Rational(0), Rational(1)}; }
}  // namespace

TEST_CASE("square node") {
    auto e = ev_square(UniPoly::linear_root(Rational(1)));
    auto rep = check_evidence(e, 5);
    CHECK(rep.valid);
    CHECK(rep.total_degree == 2);
    CHECK(e->claimed_poly == UniPoly{Rational(1), Rational(-2), Rational(1)});
}

TEST_CASE("product of the two weight axioms claims x(n-x)") {
    auto e = ev_product({ev_varsum(), ev_complement(5)});
    auto rep = check_evidence(e, 5);
    CHECK(rep.valid);
    CHECK(rep.total_degree == 4);
    LevelVector lv = levels(e->claimed_poly, 5);
    std::vector<long> expect{0, 4, 6, 6, 4, 0};
    for (std::size_t j = 0; j < expect.size(); ++j) CHECK(lv.values[j] == expect[j]);
}

TEST_CASE("falling factorial axiom: variant A levels") {
    auto e = ev_falling_factorial(2, 'A');
    CHECK(e->claimed_poly == x_poly() * UniPoly::linear_root(Rational(1)) *
                                 UniPoly::linear_root(Rational(2)) * UniPoly::linear_root(Rational(3)));
    auto rep = check_evidence(e, 6);
    CHECK(rep.valid);
    CHECK(rep.total_degree == 4);
    LevelVector lv = levels(e->claimed_poly, 6);
    std::vector<long> expect{0, 0, 0, 0, 24, 120, 360};
    for (std::size_t j = 0; j < expect.size(); ++j) CHECK(lv.values[j] == expect[j]);
}

TEST_CASE("falling factorial nonnegative at all levels for k <= ceil(n/2)") {
    for (long n : {4L, 7L, 10L}) {
        for (long k = 1; k <= (n + 1) / 2; ++k) {
            for (char variant : {'A', 'B'}) {
                UniPoly p = falling_factorial_poly(k, variant);
                for (long j = 0; j <= n; ++j) CHECK(p(Rational(j)) >= 0);
            }
        }
    }
}

TEST_CASE("sum and product identity validation") {
    auto s = ev_sum({ev_square(x_poly()), ev_scalar(Rational(3, 2))});
    auto rep = check_evidence(s, 4);
    CHECK(rep.valid);
    CHECK(s->claimed_poly == UniPoly{Rational(3, 2), Rational(0), Rational(1)});

    auto p = ev_product({ev_square(x_poly()), ev_square(UniPoly::linear_root(Rational(2)))});
    auto rep2 = check_evidence(p, 4);
    CHECK(rep2.valid);
    CHECK(rep2.total_degree == 4);
}

TEST_CASE("tampered claims are rejected with a node path") {
    auto good = ev_sum({ev_square(x_poly()), ev_scalar(Rational(1))});
    auto bad = std::make_shared<SosEvidence>(*good);
    bad->claimed_poly = bad->claimed_poly + UniPoly::constant(1);
    auto rep = check_evidence(bad, 4);
    CHECK_FALSE(rep.valid);
    CHECK(rep.failing_path == "root");

    auto inner_bad_child = std::make_shared<SosEvidence>(*ev_scalar(Rational(2)));
    inner_bad_child->scalar = Rational(-2);
    inner_bad_child->claimed_poly = UniPoly::constant(Rational(-2));
    auto outer = std::make_shared<SosEvidence>(*good);
    outer->children = {good->children[0], EvidencePtr(inner_bad_child)};
    auto rep2 = check_evidence(EvidencePtr(outer), 4);
    CHECK_FALSE(rep2.valid);
    CHECK(rep2.failing_path == "root.children[1]");
}

TEST_CASE("even power node") {
    auto e = ev_even_power(UniPoly{Rational(-1), Rational(1), Rational(1)}, 4);
    auto rep = check_evidence(e, 6);
    CHECK(rep.valid);
    CHECK(rep.total_degree == 8);
    CHECK_THROWS(ev_even_power(x_poly(), 3));
}

TEST_CASE("evidence serializes to canonical JSON") {
    auto e = ev_product({ev_scalar(Rational(1, 3)), ev_varsum(), ev_complement(4)});
    std::string js = evidence_to_json(e);
    CHECK(js.find("\"Product\"") != std::string::npos);
    CHECK(js.find("\"VarSumAxiom\"") != std::string::npos);
    CHECK(js.find("1/3") != std::string::npos);
}

TEST_CASE("complement axiom is tied to its n") {
    auto e = ev_complement(7);
    CHECK(check_evidence(e, 7).valid);
    CHECK_FALSE(check_evidence(e, 8).valid);
}
