#include "soscert/knapsack_cert.hpp"

#include <algorithm>
#include <stdexcept>

#include "soscert/enclosures.hpp"
#include "soscert/interval_sos.hpp"

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

// Picks the rational stand-in for the smallest root: the bisection upper end,
// rounded up to a short dyadic, re-verified to stay between the first two
// roots and under the pi bound.
Rational select_r0_hat(long d, long n, const SmallestRootResult& res) {
    if (res.exact) return res.r0_enclosure.hi;
    auto sign_at = [&](const Rational& x) {
        return sign(chebyshev_T_value(static_cast<unsigned>(d), x / Rational(n) - 1));
    };
    const int lo_sign = (d % 2 == 0) ? 1 : -1;  // sign of T_d(-1)
    Rational cand = round_dyadic(res.r0_enclosure.hi, 64, +1);
    if (cand <= res.pi_bound && sign_at(cand) == -lo_sign) return cand;
    return res.r0_enclosure.hi;
}

}  // namespace

UniPoly build_stilde(long n, long d, const Rational& alpha, long m, unsigned precision_bits, long offset,
                     MkParams* params_out) {
    if (m < 2 || m % 2 != 0) throw std::invalid_argument("build_stilde: m even and >= 2");
    if (d < 1 || n < 2) throw std::invalid_argument("build_stilde: d >= 1, n >= 2");
    SmallestRootResult root = smallest_root_scaled(d, n, precision_bits);
    Rational r0_hat = select_r0_hat(d, n, root);
    // inner(x) = (x - offset - 1 + r0_hat)/n - 1
    UniPoly inner{(r0_hat - Rational(offset) - 1) / Rational(n) - 1, Rational(1, n)};
    UniPoly t = compose(chebyshev_T(static_cast<unsigned>(d)), inner);
    Rational gap = chebyshev_T_value(static_cast<unsigned>(d), r0_hat / Rational(n) - 1);
    UniPoly t_hat = t - UniPoly::constant(gap);
    UniPoly out = alpha * pow(t_hat, static_cast<unsigned long>(m));
    if (params_out) {
        params_out->n = n;
        params_out->d = d;
        params_out->alpha = alpha;
        params_out->m = m;
        params_out->r0_enclosure = root.r0_enclosure;
        params_out->r0_hat = r0_hat;
        params_out->root_gap = gap;
    }
    if (out(Rational(offset + 1)) != 0) throw std::logic_error("stilde root shift failed");
    return out;
}

MkParams choose_params(long n, const Rational& P, unsigned precision_bits) {
    if (n < 2 || P < 2) throw std::invalid_argument("choose_params: n >= 2, P >= 2");
    MkParams par;
    par.n = n;
    par.P = P;
    par.d = static_cast<long>(ceil_sqrt_ratio(Integer(9) * n, Integer(1)).get_si());
    par.alpha = Rational(1, 2 * par.d * par.d);

    SmallestRootResult root = smallest_root_scaled(par.d, n, precision_bits);
    par.r0_enclosure = root.r0_enclosure;
    par.r0_hat = select_r0_hat(par.d, n, root);

    // Premises: r0 <= pi^2 n/(4 d^2) <= 1/2 and (1 + sqrt(2(1-r0)/n))^d >= 8.
    if (!(par.r0_hat <= root.pi_bound)) throw std::logic_error("r0 stand-in exceeds the pi bound");
    if (!(root.pi_bound <= Rational(1, 2))) throw std::logic_error("pi bound above 1/2; d too small");
    Rational u = 2 * (Rational(1) - par.r0_hat) / Rational(n);
    Rational A, B;
    expand_binomial_sqrt(Rational(1), u, static_cast<unsigned long>(par.d), A, B);
    bool grows = (A >= 8) || compare_against_sqrt(Rational(8) - A, B, u) <= 0;
    if (!grows) throw std::logic_error("growth premise (1+sqrt(2(1-r0)/n))^d >= 8 failed");

    // m bound with directed enclosures.
    const unsigned bits = 160;
    IntervalQ lnP = ln_enclosure(P, bits);
    IntervalQ ln_alpha = ln_enclosure(par.alpha, bits);
    Rational num_ub = lnP.hi - ln_alpha.lo;
    IntervalQ sq = sqrt_enclosure(u, bits);
    IntervalQ ln_term = ln_enclosure(Rational(1) + sq.lo, bits);
    IntervalQ ln4 = ln_enclosure(Rational(4), bits);
    Rational den_lb = Rational(par.d) * ln_term.lo - ln4.hi;
    if (den_lb <= 0) throw std::logic_error("m bound denominator not positive");
    Rational bound = num_ub / den_lb;
    long m = static_cast<long>(floor_rational(bound).get_si()) + 1;
    while (Rational(m) <= bound || m % 2 != 0) ++m;
    par.m = m;
    return par;
}

long oracle_minimal_m(long n, const Rational& P, unsigned precision_bits) {
    MkParams par = choose_params(n, P, precision_bits);
    Rational y0 = (par.r0_hat - 1) / Rational(n) - 1;
    Rational t0 = chebyshev_T_value(static_cast<unsigned>(par.d), y0);
    Rational gap = chebyshev_T_value(static_cast<unsigned>(par.d), par.r0_hat / Rational(n) - 1);
    Rational base = t0 - gap;
    Rational base2 = base * base;
    Rational value = par.alpha * base2;
    for (long m = 2; m <= 4096; m += 2) {
        if (m > 2) value = value * base2;
        if (value > P) return m;
    }
    throw std::runtime_error("oracle_minimal_m: no even m up to 4096 works");
}

std::vector<ConditionReport> verify_mk_conditions(long n, const Rational& P, const UniPoly& stilde1) {
    std::vector<ConditionReport> out;
    Rational at0 = stilde1(Rational(0));
    auto c1 = flag_report("stilde1(0) > P", "mk.cond1", at0 > P, "value " + rational_to_string(at0));
    if (!c1.pass) c1.witness = Rational(0);
    out.push_back(std::move(c1));

    UniPoly half_slope = (x_poly() - UniPoly::constant(1)) / Rational(2);
    out.push_back(cert_report("stilde1 <= (x-1)/2 on [1,2]", "mk.cond2",
                              prove_nonneg(half_slope - stilde1, IntervalQ(Rational(1), Rational(2)))));
    out.push_back(cert_report("stilde1 <= 1/2 on [2,n]", "mk.cond3",
                              prove_nonneg(UniPoly::constant(Rational(1, 2)) - stilde1,
                                           IntervalQ(Rational(2), Rational(n)))));
    return out;
}

std::vector<ConditionReport> verify_stilde_properties(long n, const MkParams& params, const UniPoly& stilde1) {
    std::vector<ConditionReport> out;
    UniPoly slope = params.alpha * Rational(params.d * params.d, n) * (x_poly() - UniPoly::constant(1));
    out.push_back(cert_report("stilde1 <= alpha d^2 (x-1)/n on [1,n]", "mk.prop.slope",
                              prove_nonneg(slope - stilde1, IntervalQ(Rational(1), Rational(n)))));
    // The root-pinning shift moves the Chebyshev extrema to 1 + |gap|, so the
    // exact cap carries that factor; the plain alpha cap is false for the
    // shifted polynomial by ~m*|gap|.
    Rational cap = params.alpha * pow_rational(Rational(1) + abs_rational(params.root_gap),
                                               static_cast<unsigned long>(params.m));
    out.push_back(cert_report("stilde1 <= alpha (1+|gap|)^m on [1,n]", "mk.prop.cap",
                              prove_nonneg(UniPoly::constant(cap) - stilde1, IntervalQ(Rational(1), Rational(n))),
                              "gap = " + rational_to_string(params.root_gap)));
    Rational u = 2 * (Rational(1) - params.r0_hat) / Rational(n);
    Rational A, B;
    expand_binomial_sqrt(Rational(1), u, static_cast<unsigned long>(params.d * params.m), A, B);
    Rational lhs = stilde1(Rational(0)) / params.alpha * pow_rational(Rational(4), static_cast<unsigned long>(params.m));
    bool ok = compare_against_sqrt(lhs - A, B, u) >= 0;
    out.push_back(flag_report("stilde1(0) >= alpha (1/4)^m (1+sqrt(2(1-r0)/n))^(dm)", "mk.prop.at0", ok,
                              "rationalized square-root comparison"));
    return out;
}

MkCertificate assemble_mk_certificate(long n, const Rational& P, unsigned precision_bits) {
    if (P < 2) throw std::invalid_argument("assemble_mk_certificate: P >= 2");
    MkCertificate cert;
    cert.params = choose_params(n, P, precision_bits);
    cert.stilde1 = build_stilde(n, cert.params.d, cert.params.alpha, cert.params.m, precision_bits, 0, &cert.params);
    cert.params.P = P;

    cert.condition_reports = verify_mk_conditions(n, P, cert.stilde1);

    cert.stilde0 = (x_poly() - UniPoly::constant(1)) - cert.stilde1 * (x_poly() - UniPoly::constant(Rational(1) / P));

    Rational at0 = cert.stilde0(Rational(0));
    cert.condition_reports.push_back(
        flag_report("stilde0(0) > 0", "mk.s0.at0", at0 > 0, "value " + rational_to_string(at0)));

    auto count_01 = count_roots(cert.stilde0, IntervalQ(Rational(0), Rational(1)));
    long roots_01 = count_01.roots_with_multiplicity();
    cert.condition_reports.push_back(flag_report("even root count in (0,1]", "mk.s0.parity", roots_01 % 2 == 0,
                                                 "count " + std::to_string(roots_01)));
    if (roots_01 % 2 != 0) {
        throw std::runtime_error("mk root pairing found an odd count in (0,1]: precision failure");
    }

    auto count_1n = count_roots(cert.stilde0, IntervalQ(Rational(1), Rational(n)));
    bool pos_tail = count_1n.root_count == 0 && cert.stilde0(Rational(n)) > 0;
    cert.condition_reports.push_back(flag_report("stilde0 > 0 on (1,n]", "mk.s0.tail", pos_tail,
                                                 "roots in (1,n]: " + std::to_string(count_1n.root_count)));

    std::vector<RootBox> boxes;
    {
        auto iso = isolate_roots_open(cert.stilde0, IntervalQ(Rational(0), Rational(1)));
        Rational eps = pow2_rational(-96);
        for (const auto& b : iso.boxes) boxes.push_back(refine_root(iso.squarefree, b, eps));
        if (cert.stilde0(Rational(1)) == 0) boxes.push_back(RootBox{Rational(1), Rational(1), true});
        std::sort(boxes.begin(), boxes.end(), [](const RootBox& a, const RootBox& b) { return a.lo < b.lo; });
    }
    if (static_cast<long>(boxes.size()) != roots_01) {
        throw std::runtime_error("mk pairing: isolation count mismatch (repeated roots?)");
    }
    UniPoly quad_product = UniPoly::constant(1);
    std::vector<std::pair<Rational, Rational>> reps;
    for (std::size_t i = 0; i + 1 < boxes.size(); i += 2) {
        cert.root_pairs.emplace_back(boxes[i], boxes[i + 1]);
        Rational ra = boxes[i].mid(), rb = boxes[i + 1].mid();
        if (ra < 0) ra = 0;
        if (rb > 1) rb = 1;
        reps.emplace_back(ra, rb);
        quad_product = quad_product * UniPoly::linear_root(ra) * UniPoly::linear_root(rb);
    }

    auto [quot, rem] = divrem(cert.stilde0, quad_product);
    cert.positive_part = quot;
    if (!rem.is_zero()) {
        IntervalQ enc = interval_bound(rem, IntervalQ(Rational(0), Rational(n)), 128);
        cert.pairing_residual_bound = std::max(abs_rational(enc.lo), abs_rational(enc.hi));
    }
    auto pos_cert = prove_nonneg(cert.positive_part, IntervalQ(Rational(0), Rational(n)), true);
    SignCertificate pos_for_lift = pos_cert;
    cert.condition_reports.push_back(cert_report("positive part > 0 on [0,n]", "mk.s0.positive_part", pos_cert));

    bool all = true;
    for (const auto& c : cert.condition_reports) all = all && c.pass;
    cert.passed = all;

    if (cert.passed) {
        SqfParams base_par;
        base_par.mode = SqfMode::Theory;
        SqfCertificate base = assemble_sqf_certificate(n, 1, base_par);
        std::vector<EvidencePtr> kids;
        kids.push_back(lift_nonneg_to_hypercube(cert.positive_part, n, 128, false, &pos_for_lift));
        for (const auto& [ra, rb] : reps) {
            kids.push_back(certificate_for_shifted_roots(n, 1, ra, rb, base));
        }
        cert.evidence = ev_product(std::move(kids));
        cert.total_degree = cert.evidence->claimed_degree;
        cert.certificate_degree = (cert.total_degree + 1) / 2;
    }
    return cert;
}

}  // namespace soscert
