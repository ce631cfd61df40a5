#include "soscert/setcover_cert.hpp"

#include <algorithm>
#include <stdexcept>

#include "soscert/enclosures.hpp"
#include "soscert/hypercube_oracle.hpp"

namespace soscert {

namespace {

UniPoly x_poly() { return UniPoly{Rational(0), Rational(1)}; }

ConditionReport cert_report(std::string name, std::string anchor, SignCertificate cert, std::string note = {}) {
    ConditionReport r;
    r.name = std::move(name);
    r.anchor = std::move(anchor);
    r.pass = cert.passed();
    r.witness = cert.witness;
    r.note = std::move(note);
    r.certificates.push_back(std::move(cert));
    return r;
}

ConditionReport flag_report(std::string name, std::string anchor, bool pass, std::string note = {}) {
    ConditionReport r;
    r.name = std::move(name);
    r.anchor = std::move(anchor);
    r.pass = pass;
    r.note = std::move(note);
    return r;
}

}  // namespace

UniPoly sc_constraint_aggregate(long n) {
    if (n < 3) throw std::invalid_argument("sc_constraint_aggregate: n >= 3");
    return UniPoly{Rational(-n), Rational(n - 1)};
}

ConditionReport verify_sc_aggregation(long n) {
    UniPoly agg = sc_constraint_aggregate(n);
    // Level identity is linear algebra: sum_i (w - [i in support] ... ) at
    // weight w equals n(w - 1) - w = (n-1)w - n.
    bool levels_ok = true;
    for (long w = 0; w <= n; ++w) {
        Rational expect = Rational(n) * Rational(w - 1) - Rational(w);
        if (agg(Rational(w)) != expect) levels_ok = false;
    }
    bool cube_ok = true;
    if (n <= kEnumerationGuard) {
        ExprPtr lhs = Expr::make_const(Rational(0));
        for (int i = 0; i < n; ++i) {
            ExprPtr gi = Expr::make_const(Rational(-1));
            for (int j = 0; j < n; ++j) {
                if (j != i) gi = Expr::add(gi, Expr::make_var(j));
            }
            lhs = Expr::add(lhs, gi);
        }
        ExprPtr rhs = Expr::sym_poly(agg);
        cube_ok = enumerate_check(ClaimKind::Identity, lhs, rhs, static_cast<int>(n)).holds;
    }
    return flag_report("constraint aggregation identity", "sc.aggregate", levels_ok && cube_ok,
                       n <= kEnumerationGuard ? "levels + full hypercube" : "levels");
}

ScParams sc_params(long n, bool corollary_set) {
    if (n < 9) throw std::invalid_argument("sc_params: n >= 9");
    ScParams p;
    p.n = n;
    p.corollary_set = corollary_set;
    p.d = static_cast<long>(ceil_sqrt_ratio(Integer(9) * n, Integer(1)).get_si());
    if (!corollary_set) {
        p.alpha = Rational(1, 18 * n);
        // m = 2*ceil(log2 sqrt(18n)): smallest even 2t with 4^t >= 18n.
        long t = 0;
        Integer pow4(1);
        while (pow4 < 18 * n) {
            pow4 *= 4;
            ++t;
        }
        p.m = 2 * t;
    } else {
        p.alpha = Rational(1, n);
        p.m = 2 * ceil_log2(Rational(n));
    }
    return p;
}

UniPoly build_sc_stilde(long n, const ScParams& params, unsigned precision_bits, MkParams* mk_out) {
    return build_stilde(n, params.d, params.alpha, params.m, precision_bits, 1, mk_out);
}

std::vector<ConditionReport> verify_sc_properties(long n, const UniPoly& stilde) {
    std::vector<ConditionReport> out;
    out.push_back(cert_report("stilde >= 1 on [0,1]", "sc.prop1",
                              prove_nonneg(stilde - UniPoly::constant(1), IntervalQ(Rational(0), Rational(1)))));
    {
        // On [1,2): stilde > 0 and stilde/(x-2) increasing. Positivity comes
        // from stilde(1) > 0 plus no roots before the pinned one at x = 2;
        // monotonicity from the sign-cleared numerator of the quotient rule.
        bool at1 = stilde(Rational(1)) > 0;
        bool at2 = stilde(Rational(2)) == 0;
        auto cnt = count_roots(stilde, IntervalQ(Rational(1), Rational(2)));
        bool no_interior = cnt.root_count == 1;  // exactly the root at 2
        ConditionReport rep = flag_report("stilde > 0 on [1,2)", "sc.prop2.positive", at1 && at2 && no_interior,
                                          "roots in (1,2]: " + std::to_string(cnt.root_count));
        out.push_back(std::move(rep));
        UniPoly numer = derivative(stilde) * UniPoly::linear_root(Rational(2)) - stilde;
        out.push_back(cert_report("stilde/(x-2) increasing on [1,2]", "sc.prop2.monotone",
                                  prove_nonneg(numer, IntervalQ(Rational(1), Rational(2)))));
    }
    out.push_back(cert_report("stilde <= (x-2)/(2n) on [2,3]", "sc.prop3",
                              prove_nonneg(UniPoly::linear_root(Rational(2)) / Rational(2 * n) - stilde,
                                           IntervalQ(Rational(2), Rational(3)))));
    out.push_back(cert_report("stilde <= 1/(2n) on [3,n]", "sc.prop4",
                              prove_nonneg(UniPoly::constant(Rational(1, 2 * n)) - stilde,
                                           IntervalQ(Rational(3), Rational(n)))));
    return out;
}

ScMainCertificate assemble_sc_main(long n, bool corollary_set, unsigned precision_bits,
                                   const SqfCertificate* base_q2) {
    ScMainCertificate cert;
    cert.n = n;
    cert.params = sc_params(n, corollary_set);
    MkParams mk;
    cert.stilde = build_sc_stilde(n, cert.params, precision_bits, &mk);

    cert.condition_reports.push_back(verify_sc_aggregation(n));
    auto props = verify_sc_properties(n, cert.stilde);
    cert.condition_reports.insert(cert.condition_reports.end(), props.begin(), props.end());

    cert.stilde0 = UniPoly::linear_root(Rational(2)) - cert.stilde * sc_constraint_aggregate(n);

    // Exact zero at x = 2.
    bool at2 = cert.stilde0(Rational(2)) == 0;
    cert.condition_reports.push_back(flag_report("stilde0(2) = 0", "sc.s0.at2", at2));

    // Positive on [0, 1): positive left end and no roots in (0, 1).
    {
        bool at0 = cert.stilde0(Rational(0)) > 0;
        auto cnt = count_roots(cert.stilde0, IntervalQ(Rational(0), Rational(1)));
        long interior = cnt.root_count - (cert.stilde0(Rational(1)) == 0 ? 1 : 0);
        cert.condition_reports.push_back(flag_report("stilde0 > 0 on [0,1)", "sc.s0.head", at0 && interior == 0,
                                                     "roots in (0,1): " + std::to_string(interior)));
    }

    // Exactly one zero a in [1, n/(n-1)], none in (n/(n-1), 2), one at 2.
    Rational knee(n, n - 1);
    long root_at_1 = cert.stilde0(Rational(1)) == 0 ? 1 : 0;
    auto cnt_knee = count_roots(cert.stilde0, IntervalQ(Rational(1), knee));
    auto cnt_rest = count_roots(cert.stilde0, IntervalQ(knee, Rational(2)));
    bool zero_struct = (root_at_1 + cnt_knee.root_count == 1) && (cnt_rest.root_count == 1) && at2;
    cert.condition_reports.push_back(
        flag_report("exactly two zeros in [1,2], one at x=2", "sc.s0.zeros", zero_struct,
                    "[1,knee]: " + std::to_string(root_at_1 + cnt_knee.root_count) +
                        ", (knee,2]: " + std::to_string(cnt_rest.root_count)));

    // Positive on (2, n].
    {
        auto cnt = count_roots(cert.stilde0, IntervalQ(Rational(2), Rational(n)));
        bool tail = cnt.root_count == 0 && cert.stilde0(Rational(n)) > 0;
        cert.condition_reports.push_back(flag_report("stilde0 > 0 on (2,n]", "sc.s0.tail", tail,
                                                     "roots in (2,n]: " + std::to_string(cnt.root_count)));
    }

    // Isolate a and divide out the certified quadratic.
    Rational a_rep;
    if (root_at_1 == 1) {
        cert.root_a = RootBox{Rational(1), Rational(1), true};
        a_rep = Rational(1);
    } else {
        auto iso = isolate_roots_open(cert.stilde0, IntervalQ(Rational(1), knee));
        RootBox box;
        if (iso.boxes.empty()) {
            // The single root may sit exactly at the knee.
            if (cert.stilde0(knee) == 0) {
                box = RootBox{knee, knee, true};
            } else {
                throw std::runtime_error("sc zero-count mismatch while isolating a");
            }
        } else {
            box = refine_root(iso.squarefree, iso.boxes.front(), pow2_rational(-96));
        }
        cert.root_a = box;
        a_rep = box.mid();
    }
    if (a_rep < 1) a_rep = 1;
    if (a_rep > 2) a_rep = 2;

    UniPoly exact_factor = UniPoly::linear_root(Rational(2));
    UniPoly reduced = exact_div(cert.stilde0, exact_factor);  // the root at 2 is exact
    auto [quot, rem] = divrem(reduced, UniPoly::linear_root(a_rep));
    cert.positive_part = quot;
    if (!rem.is_zero()) {
        // Residual against the full quadratic on [0,n].
        UniPoly resid = cert.stilde0 - cert.positive_part * (UniPoly::linear_root(a_rep) * exact_factor);
        IntervalQ enc = interval_bound(resid, IntervalQ(Rational(0), Rational(n)), 128);
        cert.pairing_residual_bound = std::max(abs_rational(enc.lo), abs_rational(enc.hi));
    }
    auto pos = prove_nonneg(cert.positive_part, IntervalQ(Rational(0), Rational(n)), true);
    SignCertificate pos_for_lift = pos;
    cert.condition_reports.push_back(cert_report("positive part > 0 on [0,n]", "sc.s0.positive_part", pos));

    bool all = true;
    for (const auto& c : cert.condition_reports) all = all && c.pass;
    cert.passed = all;

    if (cert.passed) {
        SqfCertificate local_base;
        const SqfCertificate* base = base_q2;
        if (base == nullptr) {
            local_base = search_sqf_certificate(n, 2);
            if (!local_base.passed) throw std::runtime_error("sc main: no q_2 base certificate found");
            base = &local_base;
        }
        cert.base_q2_degree = base->total_degree;
        std::vector<EvidencePtr> kids;
        kids.push_back(lift_nonneg_to_hypercube(cert.positive_part, n, 128, false, &pos_for_lift));
        kids.push_back(certificate_for_shifted_roots(n, 2, a_rep, Rational(2), *base));
        cert.evidence = ev_product(std::move(kids));
        cert.total_degree = cert.evidence->claimed_degree;
        cert.certificate_degree = (cert.total_degree + 1) / 2;
    }
    return cert;
}

// ---- appendix route --------------------------------------------------------

ScHEvidence build_h1_h2_evidence(long n) {
    if (n < 2) throw std::invalid_argument("build_h1_h2_evidence: n >= 2");
    ScHEvidence ev;
    // h1: x - 1 = ((n-1)x - n)/(n-1) + 1/(n-1), exact coefficient identity.
    UniPoly lhs1 = x_poly() - UniPoly::constant(1);
    UniPoly rhs1 = (UniPoly{Rational(-n), Rational(n - 1)} + UniPoly::constant(1)) / Rational(n - 1);
    ev.h1_level_identity = lhs1 == rhs1;
    // h2: x(x-2) expansion collapses termwise: x_j (|x| - x_j - 1) + (x_j^2 - x_j)
    // equals x_j(|x| - 2) on the cube; at the level of symmetric values the sum
    // is w(w-2).
    bool levels_ok = true;
    UniPoly h2 = x_poly() * UniPoly::linear_root(Rational(2));
    for (long w = 0; w <= n; ++w) {
        Rational lhs = Rational(w) * (Rational(w) - 2);
        if (h2(Rational(w)) != lhs) levels_ok = false;
    }
    ev.h2_level_identity = levels_ok;

    // Full-cube confirmation runs at the real n when small, else at n = 12
    // with that size's own constants (the identities are per-n statements).
    ev.hypercube_identity = true;
    {
        const long nh = std::min<long>(n, 12);
        const int ni = static_cast<int>(nh);
        const Rational inv(1, nh - 1);
        // h1 expansion
        ExprPtr sum_g = Expr::make_const(Rational(0));
        for (int i = 0; i < ni; ++i) {
            ExprPtr gi = Expr::make_const(Rational(-1));
            for (int j = 0; j < ni; ++j) {
                if (j != i) gi = Expr::add(gi, Expr::make_var(j));
            }
            sum_g = Expr::add(sum_g, gi);
        }
        ExprPtr h1_rhs = Expr::add(Expr::mul(Expr::make_const(inv), sum_g), Expr::make_const(inv));
        ExprPtr h1_lhs = Expr::sub(expr_weight(ni), Expr::make_const(Rational(1)));
        bool ok1 = enumerate_check(ClaimKind::Identity, h1_lhs, h1_rhs, ni).holds;

        // h2 expansion: sum_j [x_j^2 g_j - (x_j^2 - x_j) g_j + (x_j^2 - x_j)]
        ExprPtr h2_rhs = Expr::make_const(Rational(0));
        for (int j = 0; j < ni; ++j) {
            ExprPtr gj = Expr::make_const(Rational(-1));
            for (int i = 0; i < ni; ++i) {
                if (i != j) gj = Expr::add(gj, Expr::make_var(i));
            }
            ExprPtr xj = Expr::make_var(j);
            ExprPtr xj2 = Expr::pow(Expr::make_var(j), 2);
            ExprPtr bool_j = Expr::sub(xj2, xj);
            ExprPtr term = Expr::add(Expr::sub(Expr::mul(xj2, gj), Expr::mul(bool_j, gj)), bool_j);
            h2_rhs = Expr::add(h2_rhs, term);
        }
        ExprPtr h2_lhs = Expr::mul(expr_weight(ni), Expr::sub(expr_weight(ni), Expr::make_const(Rational(2))));
        bool ok2 = enumerate_check(ClaimKind::Identity, h2_lhs, h2_rhs, ni).holds;
        ev.hypercube_identity = ok1 && ok2;
    }

    ev.h1_fragments.push_back({"each constraint g_i", "1/(n-1)", "nonnegative scalar"});
    ev.h1_fragments.push_back({"constant term", "1/(n-1)", "nonnegative scalar"});
    for (const char* frag : {"x_j^2 times g_j", "boolean axiom times -g_j", "boolean axiom times 1"}) {
        ev.h2_fragments.push_back({"per-variable", frag, frag[0] == 'x' ? "square of degree 1" : "axiom multiple"});
    }
    return ev;
}

ScP1P2 build_p1_p2(long n) {
    if (n < 16) throw std::invalid_argument("build_p1_p2: n >= 16");
    ScP1P2 pp;
    // d1 = ceil(2 sqrt(n) log2 n): exact when sqrt(n) is an integer, else via
    // enclosure refinement.
    Integer isq;
    mpz_sqrt(isq.get_mpz_t(), Integer(n).get_mpz_t());
    if (isq * isq == n) {
        // smallest t with 2^t >= n^(2 sqrt n)
        Rational npow = pow_rational(Rational(n), static_cast<unsigned long>(2 * isq.get_si()));
        pp.d1 = ceil_log2(npow);
    } else {
        for (unsigned bits = 96;; bits *= 2) {
            IntervalQ sq = sqrt_enclosure(Rational(n), bits);
            IntervalQ lg = log2_enclosure(Rational(n), bits);
            IntervalQ prod(Rational(2) * sq.lo * lg.lo, Rational(2) * sq.hi * lg.hi);
            Integer clo = ceil_rational(prod.lo);
            Integer chi = ceil_rational(prod.hi);
            if (clo == chi) {
                pp.d1 = static_cast<long>(clo.get_si());
                break;
            }
            if (bits > 4096) throw std::runtime_error("d1 enclosure failed to settle");
        }
    }
    UniPoly T = chebyshev_T(static_cast<unsigned>(pp.d1));
    Rational t_at = chebyshev_T_value(static_cast<unsigned>(pp.d1), Rational(-2, n) - 1);
    Rational D = t_at * t_at;  // T^2(-2/n - 1)
    pp.c1 = D / Rational(2 * n * n);
    pp.c2 = D / Rational(n);

    UniPoly inner1{Rational(-4, n) - 1, Rational(2, n)};  // 2(x-2)/n - 1
    UniPoly t1 = compose(T, inner1);
    UniPoly sq2 = UniPoly::linear_root(Rational(2)) * UniPoly::linear_root(Rational(2));
    pp.p1 = sq2 * (t1 * t1) / D;

    UniPoly inner2{Rational(-6, n) - 1, Rational(2, n)};  // 2(x-3)/n - 1
    UniPoly t2 = compose(T, inner2);
    pp.p2 = (t2 * t2) / (2 * D);

    if (pp.p1(Rational(1)) != 1) throw std::logic_error("p1(1) != 1");
    if (pp.p2(Rational(2)) != Rational(1, 2)) throw std::logic_error("p2(2) != 1/2");
    return pp;
}

std::vector<ConditionReport> verify_appendix_lemmas(long n, const ScP1P2& pp) {
    std::vector<ConditionReport> out;
    const UniPoly& p1 = pp.p1;
    const UniPoly& p2 = pp.p2;
    UniPoly xm2 = UniPoly::linear_root(Rational(2));
    UniPoly sq2 = xm2 * xm2;

    out.push_back(cert_report("p1 >= 4 on [0,1/2]", "sc.appx.p1.prop1",
                              prove_nonneg(p1 - UniPoly::constant(4), IntervalQ(Rational(0), Rational(1, 2)))));
    {
        UniPoly cap = (UniPoly::constant(Rational(19, 10)) - Rational(9, 10) * x_poly()) * sq2;
        out.push_back(cert_report("p1 <= (1 - 0.9(x-1))(x-2)^2 on [1,2]", "sc.appx.p1.prop2",
                                  prove_nonneg(cap - p1, IntervalQ(Rational(1), Rational(2)))));
    }
    out.push_back(cert_report("p1 <= (x-2)^2/(2n^2) on [2,n]", "sc.appx.p1.prop3",
                              prove_nonneg(sq2 / Rational(2 * n * n) - p1, IntervalQ(Rational(2), Rational(n)))));

    out.push_back(cert_report("p2 >= 4 on [0,1]", "sc.appx.p2.prop1",
                              prove_nonneg(p2 - UniPoly::constant(4), IntervalQ(Rational(0), Rational(1)))));
    out.push_back(flag_report("p2(2) = 1/2", "sc.appx.p2.prop2", p2(Rational(2)) == Rational(1, 2)));
    out.push_back(cert_report("p2' <= -1 on [1,2]", "sc.appx.p2.prop3",
                              prove_nonneg(Rational(-1) * derivative(p2) - UniPoly::constant(1),
                                           IntervalQ(Rational(1), Rational(2)))));
    {
        UniPoly cap = UniPoly::constant(Rational(1, 2)) - Rational(9, 20) * xm2;
        out.push_back(cert_report("p2 <= 1/2 - 0.45(x-2) on [2,3]", "sc.appx.p2.prop4",
                                  prove_nonneg(cap - p2, IntervalQ(Rational(2), Rational(3)))));
    }
    out.push_back(cert_report("p2 <= 1/(2n) on [3,n]", "sc.appx.p2.prop5",
                              prove_nonneg(UniPoly::constant(Rational(1, 2 * n)) - p2,
                                           IntervalQ(Rational(3), Rational(n)))));
    return out;
}

ScAppendixCertificate assemble_sc_appendix(long n, unsigned precision_bits, bool decompose) {
    ScAppendixCertificate cert;
    cert.n = n;
    cert.parts = build_p1_p2(n);
    cert.h_evidence = build_h1_h2_evidence(n);
    cert.condition_reports.push_back(flag_report("h1/h2 identities", "sc.appx.h", cert.h_evidence.all_pass(),
                                                 "level identities plus hypercube check at n <= 12"));

    auto lemmas = verify_appendix_lemmas(n, cert.parts);
    cert.condition_reports.insert(cert.condition_reports.end(), lemmas.begin(), lemmas.end());

    UniPoly h1 = x_poly() - UniPoly::constant(1);
    UniPoly h2 = x_poly() * UniPoly::linear_root(Rational(2));
    cert.f = UniPoly::linear_root(Rational(2)) - cert.parts.p1 * h1 - cert.parts.p2 * h2;

    cert.condition_reports.push_back(flag_report("f(2) = 0", "sc.appx.f.at2", cert.f(Rational(2)) == 0));
    auto fpos = prove_nonneg(cert.f, IntervalQ(Rational(0), Rational(n)));
    cert.condition_reports.push_back(cert_report("f >= 0 on [0,n]", "sc.appx.f.nonneg", fpos));

    bool all = true;
    for (const auto& c : cert.condition_reports) all = all && c.pass;

    if (all && decompose) {
        cert.decomposition = decompose_on_interval(cert.f, IntervalQ(Rational(0), Rational(n)), precision_bits);
        cert.condition_reports.push_back(flag_report(
            "two-slot decomposition residual within tolerance", "sc.appx.f.decompose",
            cert.decomposition->residual_bound <=
                pow2_rational(-static_cast<long>(precision_bits)) * coeff_norm_inf(cert.f),
            "residual bound " + rational_to_string(cert.decomposition->residual_bound)));
        all = all && cert.condition_reports.back().pass;
    }
    cert.passed = all;
    cert.total_degree = cert.f.degree() + 1;
    cert.certificate_degree = (cert.total_degree + 1) / 2;
    return cert;
}

}  // namespace soscert
