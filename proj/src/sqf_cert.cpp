#include "soscert/sqf_cert.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "soscert/enclosures.hpp"
#include "soscert/interval_sos.hpp"

namespace soscert {

namespace {

UniPoly x_poly() { return UniPoly{Rational(0), Rational(1)}; }

ConditionReport from_cert(std::string name, std::string anchor, SignCertificate cert, std::string note = {}) {
    ConditionReport r;
    r.name = std::move(name);
    r.anchor = std::move(anchor);
    r.pass = cert.passed();
    r.witness = cert.witness;
    r.note = std::move(note);
    r.certificates.push_back(std::move(cert));
    return r;
}

ConditionReport from_flag(std::string name, std::string anchor, bool pass, std::string note = {}) {
    ConditionReport r;
    r.name = std::move(name);
    r.anchor = std::move(anchor);
    r.pass = pass;
    r.note = std::move(note);
    return r;
}

// prove_nonneg that treats an identically-zero difference as trivially true.
SignCertificate nonneg_or_zero(const UniPoly& p, const IntervalQ& I, bool strict = false) {
    if (p.is_zero()) {
        SignCertificate c;
        c.poly = p;
        c.interval = I;
        c.verdict = SignVerdict::Nonnegative;
        c.method = "evaluation";
        return c;
    }
    return prove_nonneg(p, I, strict);
}

}  // namespace

UniPoly sqf_target(long k) {
    return UniPoly::linear_root(Rational(k - 1)) * UniPoly::linear_root(Rational(k));
}

SqfParams theory_params(long n, long k) {
    SqfParams p;
    p.n = n;
    p.k = k;
    p.mode = SqfMode::Theory;
    p.e_g = 16 * k;
    p.d_H = static_cast<long>(ceil_sqrt_ratio(Integer(n), Integer(k)).get_si());
    p.C = upper_e_8_sqrt3(128);
    Integer c2 = ceil_rational(Rational(p.C * p.C));
    p.e_p = 4 * static_cast<long>(c2.get_si());
    // ceil(k log2 n) = smallest t with 2^t >= n^k
    long t = ceil_log2(pow_rational(Rational(n), static_cast<unsigned long>(k)));
    p.m_s2 = 40 * t;
    return p;
}

UniPoly build_g(long k, long e_g) {
    if (k < 2) throw std::invalid_argument("build_g: k >= 2");
    if (e_g < 2 || e_g % 2 != 0) throw std::invalid_argument("build_g: e_g even and >= 2");
    UniPoly core = pow(x_poly() * UniPoly::linear_root(Rational(2 * k - 1)), static_cast<unsigned long>(e_g));
    for (long i = 0; i <= 2 * k - 1; ++i) {
        if (i == k - 1 || i == k) continue;
        core = core * UniPoly::linear_root(Rational(i));
    }
    return core;
}

UniPoly build_s1(long n, long k, long e_g) {
    if (k < 1 || k > (n + 1) / 2) throw std::invalid_argument("build_s1: 1 <= k <= ceil(n/2)");
    if (k == 1) return x_poly() * UniPoly::linear_root(Rational(1));
    UniPoly g = build_g(k, e_g);
    Rational g_at = g(Rational(k - 1));
    UniPoly q = sqf_target(k);
    if (k % 2 == 1) {
        if (g_at <= 0) throw std::logic_error("g(k-1) must be positive for odd k");
        return g * q / g_at;
    }
    if (g_at >= 0) throw std::logic_error("g(k-1) must be negative for even k");
    UniPoly extra = UniPoly{Rational(1), Rational(1)} * UniPoly::linear_root(Rational(2 * k));
    Rational denom = g_at * Rational(k) * Rational(k + 1);
    return Rational(-1) * (g * extra * q) / denom;
}

EvidencePtr s1_evidence(long n, long k, long e_g) {
    if (k == 1) {
        return ev_falling_factorial(1, 'A');
    }
    UniPoly g = build_g(k, e_g);
    Rational g_at = g(Rational(k - 1));
    std::vector<EvidencePtr> kids;
    if (k % 2 == 1) {
        kids.push_back(ev_scalar(Rational(1) / g_at));
        kids.push_back(ev_even_power(x_poly(), static_cast<unsigned long>(e_g)));
        kids.push_back(ev_even_power(UniPoly::linear_root(Rational(2 * k - 1)), static_cast<unsigned long>(e_g)));
        kids.push_back(ev_falling_factorial(k, 'A'));
    } else {
        kids.push_back(ev_scalar(Rational(-1) / (g_at * Rational(k) * Rational(k + 1))));
        kids.push_back(ev_even_power(x_poly(), static_cast<unsigned long>(e_g)));
        kids.push_back(ev_even_power(UniPoly::linear_root(Rational(2 * k - 1)), static_cast<unsigned long>(e_g)));
        kids.push_back(ev_falling_factorial(k, 'B'));
    }
    auto ev = ev_product(std::move(kids));
    if (ev->claimed_poly != build_s1(n, k, e_g)) throw std::logic_error("s1 evidence does not reproduce s1");
    return ev;
}

std::vector<ConditionReport> verify_s1_conditions(long n, long k, const UniPoly& s1, const Rational& bound_B) {
    std::vector<ConditionReport> out;
    UniPoly q = sqf_target(k);
    UniPoly r = exact_div(s1, q);
    const Rational km1(k - 1), kk(k), edge(2 * k - 1), nn(n);

    out.push_back(from_cert("s1 ratio >= 1 on [k-1,k]", "sqf.s1.cond2",
                            nonneg_or_zero(r - UniPoly::constant(1), IntervalQ(km1, kk))));

    {
        SignCertificate up = nonneg_or_zero(UniPoly::constant(1) - r, IntervalQ(Rational(0), km1));
        SignCertificate dn = nonneg_or_zero(r + UniPoly::constant(1), IntervalQ(Rational(0), km1));
        ConditionReport rep = from_cert("|s1 ratio| <= 1 on [0,k-1]", "sqf.s1.cond3.left", std::move(up));
        rep.pass = rep.pass && dn.passed();
        if (!dn.passed()) rep.witness = dn.witness;
        rep.certificates.push_back(std::move(dn));
        out.push_back(std::move(rep));
    }
    {
        SignCertificate up = nonneg_or_zero(UniPoly::constant(1) - r, IntervalQ(kk, edge));
        SignCertificate dn = nonneg_or_zero(r + UniPoly::constant(1), IntervalQ(kk, edge));
        ConditionReport rep = from_cert("|s1 ratio| <= 1 on [k,2k-1]", "sqf.s1.cond3.right", std::move(up));
        rep.pass = rep.pass && dn.passed();
        if (!dn.passed()) rep.witness = dn.witness;
        rep.certificates.push_back(std::move(dn));
        out.push_back(std::move(rep));
    }
    {
        SignCertificate up = nonneg_or_zero(UniPoly::constant(bound_B) - r, IntervalQ(edge, nn));
        SignCertificate dn = nonneg_or_zero(r + UniPoly::constant(bound_B), IntervalQ(edge, nn));
        ConditionReport rep = from_cert("|s1 ratio| <= B on [2k-1,n]", "sqf.s1.cond4", std::move(up));
        rep.pass = rep.pass && dn.passed();
        if (!dn.passed()) rep.witness = dn.witness;
        rep.certificates.push_back(std::move(dn));
        out.push_back(std::move(rep));
    }
    return out;
}

UniPoly build_H(long n, long k, long d_H) {
    if (k < 2 || k > (n + 1) / 2) throw std::invalid_argument("build_H: 2 <= k <= ceil(n/2)");
    if (d_H < 1) throw std::invalid_argument("build_H: d_H >= 1");
    UniPoly inner{Rational(-1) - Rational(2 * (2 * k - 1), n), Rational(2, n)};
    UniPoly t = compose(chebyshev_T(static_cast<unsigned>(d_H)), inner);
    return t * t;
}

bool HPropertyReport::all_pass() const {
    for (const auto& c : conditions) {
        if (!c.pass) return false;
    }
    return true;
}

HPropertyReport verify_H_properties(long n, long k, const UniPoly& H, const Rational& C) {
    HPropertyReport rep;
    const Rational edge(2 * k - 1), nn(n);
    rep.a = H(Rational(k));
    rep.b = H(Rational(k - 1));
    rep.conditions.push_back(from_cert("H <= 1 on [2k-1,n]", "sqf.H.prop1",
                                       nonneg_or_zero(UniPoly::constant(1) - H, IntervalQ(edge, nn))));
    rep.conditions.push_back(from_cert(
        "H decreasing on [0,2k-1]", "sqf.H.prop2",
        nonneg_or_zero(Rational(-1) * derivative(H), IntervalQ(Rational(0), edge), true)));
    Rational h0 = H(Rational(0));
    auto c3 = from_flag("H(0) <= C", "sqf.H.prop3", h0 <= C, "H(0) = " + rational_to_string(h0));
    if (!c3.pass) c3.witness = Rational(0);
    rep.conditions.push_back(std::move(c3));
    auto c4 = from_flag("H(k) >= 3/2", "sqf.H.prop4", rep.a >= Rational(3, 2),
                        "H(k) = " + rational_to_string(rep.a));
    if (!c4.pass) c4.witness = Rational(k);
    rep.conditions.push_back(std::move(c4));
    return rep;
}

UniPoly build_p_abc(const Rational& a, const Rational& b, const Rational& C, long e_p) {
    if (!(Rational(3, 2) <= a && a < b && b < C)) {
        throw std::invalid_argument("build_p_abc: needs 3/2 <= a < b < C");
    }
    if (e_p < 1) throw std::invalid_argument("build_p_abc: e_p >= 1");
    UniPoly quad = UniPoly::linear_root(a) * UniPoly::linear_root(b);
    UniPoly base = UniPoly::constant(1) - quad / (C * C);
    return pow(base, static_cast<unsigned long>(e_p));
}

Rational default_search_C(const UniPoly& H, const Rational& a, const Rational& b) {
    Rational C = b * Rational(65, 64);
    Rational h0 = H(Rational(0));
    if (h0 > b) {
        // Keep |1 - (y-a)(y-b)/C^2| <= 1 up to y = H(0): C^2 >= (H0-a)(H0-b)/2.
        Rational need = (h0 - a) * (h0 - b) / 2;
        if (C * C < need) {
            Rational root = sqrt_enclosure(need, 64).hi;
            C = root * Rational(33, 32);
        }
    }
    return C;
}

UniPoly build_s2(long n, long k, const SqfParams& params) {
    if (params.m_s2 < 2 || params.m_s2 % 2 != 0) throw std::invalid_argument("build_s2: m_s2 even and >= 2");
    UniPoly H = build_H(n, k, params.d_H);
    Rational a = H(Rational(k));
    Rational b = H(Rational(k - 1));
    if (a < Rational(3, 2)) throw std::invalid_argument("build_s2: H(k) >= 3/2 required");
    UniPoly p = build_p_abc(a, b, params.C, params.e_p);
    UniPoly composed = compose(p, H);
    return pow(composed, static_cast<unsigned long>(params.m_s2));
}

std::vector<ConditionReport> verify_s2_conditions(long n, long k, const UniPoly& s2, const Rational& bound_B) {
    std::vector<ConditionReport> out;
    const Rational km1(k - 1), kk(k), edge(2 * k - 1), nn(n);
    out.push_back(from_cert("s2 >= 1 on [k-1,k]", "sqf.s2.cond2",
                            nonneg_or_zero(s2 - UniPoly::constant(1), IntervalQ(km1, kk))));
    {
        SignCertificate left = nonneg_or_zero(UniPoly::constant(1) - s2, IntervalQ(Rational(0), km1));
        SignCertificate right = nonneg_or_zero(UniPoly::constant(1) - s2, IntervalQ(kk, edge));
        ConditionReport rep = from_cert("s2 <= 1 on [0,k-1] and [k,2k-1]", "sqf.s2.cond3", std::move(left));
        rep.pass = rep.pass && right.passed();
        if (!right.passed()) rep.witness = right.witness;
        rep.certificates.push_back(std::move(right));
        out.push_back(std::move(rep));
    }
    out.push_back(from_cert("s2 <= 1/B on [2k-1,n]", "sqf.s2.cond4",
                            nonneg_or_zero(UniPoly::constant(Rational(1) / bound_B) - s2, IntervalQ(edge, nn))));
    return out;
}

namespace {

// Theory-scale s2 conditions at the level of the factors: quadratic facts
// about the bump polynomial plus scalar exponent arithmetic.
void theory_s2_factored_conditions(long n, long k, const SqfParams& par, const Rational& a, const Rational& b,
                                   std::vector<ConditionReport>& out) {
    const Rational& C = par.C;
    UniPoly quad = UniPoly::linear_root(a) * UniPoly::linear_root(b);

    out.push_back(from_cert("bump base >= 1 on [a,b]", "sqf.s2.factored.onab",
                            nonneg_or_zero(Rational(-1) * quad, IntervalQ(a, b)), "factored"));
    {
        SignCertificate c1 = nonneg_or_zero(quad, IntervalQ(Rational(0), a));
        SignCertificate c2 = nonneg_or_zero(quad, IntervalQ(b, C));
        SignCertificate c3 = nonneg_or_zero(UniPoly::constant(2 * C * C) - quad, IntervalQ(Rational(0), C));
        ConditionReport rep =
            from_cert("|bump base| <= 1 on [0,a] u [b,C]", "sqf.s2.factored.outside", std::move(c1), "factored");
        rep.pass = rep.pass && c2.passed() && c3.passed();
        rep.certificates.push_back(std::move(c2));
        rep.certificates.push_back(std::move(c3));
        out.push_back(std::move(rep));
    }
    out.push_back(from_cert(
        "bump quadratic >= 1/4 on [0,1]", "sqf.s2.factored.on01",
        nonneg_or_zero(quad - UniPoly::constant(Rational(1, 4)), IntervalQ(Rational(0), Rational(1))), "factored"));
    {
        Rational eps = Rational(1) / (4 * C * C);
        IntervalQ ln_base = ln_enclosure(Rational(1) - eps, 160);
        IntervalQ ln_half = ln_enclosure(Rational(1, 2), 160);
        bool ok = Rational(par.e_p) * ln_base.hi <= ln_half.lo;
        out.push_back(from_flag("bump power halves on [0,1]", "sqf.s2.factored.halving", ok,
                                "e_p * ln(1 - 1/(4C^2)) <= ln(1/2), directed enclosures"));
    }
    {
        Integer lhs;
        mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(40 * k));
        Integer rhs(1);
        rhs <<= static_cast<unsigned long>(par.m_s2);
        out.push_back(from_flag("outer power reaches n^(-40k)", "sqf.s2.factored.outer", lhs <= rhs,
                                "n^(40k) <= 2^(m_s2), exact"));
    }
}

SqfCertificate assemble_k1(long n) {
    SqfCertificate cert;
    cert.params.n = n;
    cert.params.k = 1;
    cert.params.mode = SqfMode::Theory;
    cert.s1 = build_s1(n, 1, 2);
    cert.s2 = UniPoly::constant(1);
    cert.s = cert.s1;
    cert.final_is_zero = true;
    cert.final_check.poly = UniPoly::zero();
    cert.final_check.interval = IntervalQ(Rational(0), Rational(n));
    cert.final_check.verdict = SignVerdict::Nonnegative;
    cert.final_check.method = "evaluation";
    for (long j = 0; j <= n; ++j) cert.level_margins.push_back(Rational(0));
    cert.evidence_s = s1_evidence(n, 1, 2);
    cert.evidence_qk = cert.evidence_s;
    cert.total_degree = 2;
    cert.certificate_degree = 1;
    cert.theory_degree = 2;
    cert.passed = true;
    cert.condition_reports.push_back(
        from_flag("k=1 shortcut: s = x(x-1) = q_1", "sqf.k1", true, "difference identically zero"));
    return cert;
}

}  // namespace

SqfCertificate assemble_sqf_certificate(long n, long k, const SqfParams& params_in) {
    if (k < 1 || k > (n + 1) / 2) throw std::invalid_argument("assemble: 1 <= k <= ceil(n/2)");
    if (k == 1) return assemble_k1(n);

    SqfParams params = params_in;
    params.n = n;
    params.k = k;
    SqfCertificate cert;
    cert.params = params;

    cert.s1 = build_s1(n, k, params.e_g);
    Rational bound_B = pow_rational(Rational(n), static_cast<unsigned long>(40 * k));

    UniPoly H = build_H(n, k, params.d_H);
    Rational C_theory = upper_e_8_sqrt3(128);
    HPropertyReport hrep = verify_H_properties(n, k, H, C_theory);
    Rational a = hrep.a, b = hrep.b;

    {
        SqfParams th = theory_params(n, k);
        Integer s1_deg(2 * th.e_g + 2 * k - 2 + 2 + (k % 2 == 0 ? 2 : 0));
        Integer s2_deg = Integer(4) * th.d_H * th.e_p * th.m_s2;
        cert.theory_degree = s1_deg + s2_deg;
    }

    if (params.mode == SqfMode::Theory) {
        auto s1_conds = verify_s1_conditions(n, k, cert.s1, bound_B);
        cert.condition_reports.insert(cert.condition_reports.end(), s1_conds.begin(), s1_conds.end());
        cert.condition_reports.insert(cert.condition_reports.end(), hrep.conditions.begin(), hrep.conditions.end());
        theory_s2_factored_conditions(n, k, params, a, b, cert.condition_reports);
        cert.evidence_s = s1_evidence(n, k, params.e_g);  // the s1 factor; s2 stays symbolic
        cert.total_degree = cert.s1.degree();
        cert.certificate_degree = (cert.total_degree + 1) / 2;
        cert.passed = true;
        for (const auto& c : cert.condition_reports) cert.passed = cert.passed && c.pass;
        return cert;
    }

    // Search-scale assembly: everything materialized, one authoritative check.
    cert.s2 = build_s2(n, k, params);
    cert.s = cert.s1 * cert.s2;
    UniPoly q = sqf_target(k);
    UniPoly diff = q - cert.s;

    cert.condition_reports.insert(cert.condition_reports.end(), hrep.conditions.begin(), hrep.conditions.end());

    bool levels_ok = true;
    for (long j = 0; j <= n; ++j) {
        Rational margin = diff(Rational(j));
        if (margin < 0) levels_ok = false;
        cert.level_margins.push_back(std::move(margin));
    }
    cert.condition_reports.push_back(from_flag("q_k(j) >= s(j) at all integer levels", "sqf.levels", levels_ok));

    if (levels_ok) {
        cert.final_check = nonneg_or_zero(diff, IntervalQ(Rational(0), Rational(n)));
        cert.final_is_zero = diff.is_zero();
        cert.condition_reports.push_back(from_cert("q_k - s >= 0 on [0,n]", "sqf.final", cert.final_check));
    } else {
        cert.condition_reports.push_back(
            from_flag("q_k - s >= 0 on [0,n]", "sqf.final", false, "skipped: level screen already failed"));
    }

    cert.passed = levels_ok && cert.final_check.passed();
    for (const auto& c : hrep.conditions) cert.passed = cert.passed && c.pass;

    if (cert.passed) {
        EvidencePtr s1_ev = s1_evidence(n, k, params.e_g);
        UniPoly p_abc = build_p_abc(a, b, params.C, params.e_p);
        EvidencePtr s2_ev = ev_even_power(compose(p_abc, H), static_cast<unsigned long>(params.m_s2));
        cert.evidence_s = ev_product({s1_ev, s2_ev});
        if (cert.evidence_s->claimed_poly != cert.s) throw std::logic_error("s evidence mismatch");
        cert.evidence_difference = lift_nonneg_to_hypercube(diff, n, 128, false, &cert.final_check);
        cert.evidence_qk = ev_sum({cert.evidence_s, cert.evidence_difference});
        if (cert.evidence_qk->claimed_poly != q) throw std::logic_error("q_k evidence mismatch");
        cert.total_degree = cert.s.degree();
        long lifted = diff.is_zero() ? 0 : diff.degree() + 2;
        cert.certificate_degree = (std::max(cert.total_degree, lifted) + 1) / 2;
    }
    return cert;
}

namespace {

struct SearchCandidate {
    long e_g = 0, d_H = 0, e_p = 0, m_s2 = 0;
    Rational C;
    long degree = 0;
};

}  // namespace

SqfCertificate search_sqf_certificate(long n, long k) {
    if (k == 1) return assemble_k1(n);
    std::vector<SearchCandidate> candidates;
    const long d0 = static_cast<long>(ceil_sqrt_ratio(Integer(n), Integer(k)).get_si());
    for (long e_g : {2L, 4L}) {
        UniPoly s1 = build_s1(n, k, e_g);
        UniPoly r = exact_div(s1, sqf_target(k));
        for (long d_H = 2; d_H <= std::max<long>(d0 + 1, 5); ++d_H) {
            UniPoly H = build_H(n, k, d_H);
            Rational a = H(Rational(k));
            Rational b = H(Rational(k - 1));
            if (a < Rational(3, 2) || !(a < b)) continue;
            Rational C = default_search_C(H, a, b);
            // Estimate the exponent that pushes r * s2 under 1 outside
            // [k-1,k]; floating point is fine here, the exact final check is
            // what accepts a candidate.
            const double C2 = C.get_d() * C.get_d();
            const double av = a.get_d(), bv = b.get_d();
            double worst = 0.0;
            bool feasible = true;
            const int grid = 600;
            for (int gi = 0; gi <= grid && feasible; ++gi) {
                Rational xq = Rational(2 * k) + Rational(n - 2 * k) * Rational(gi, grid);
                double rv = std::abs(r(xq).get_d());
                if (rv <= 1.0) continue;
                double hv = H(xq).get_d();
                double base = std::abs(1.0 - (hv - av) * (hv - bv) / C2);
                if (base >= 1.0) {
                    feasible = false;
                    break;
                }
                worst = std::max(worst, std::log(rv) / -std::log(base));
            }
            if (!feasible) continue;
            long E = static_cast<long>(std::ceil(worst * 1.10)) + 4;
            SearchCandidate cand;
            cand.e_g = e_g;
            cand.d_H = d_H;
            cand.e_p = std::max<long>(1, (E + 1) / 2);
            cand.m_s2 = 2;
            cand.C = C;
            cand.degree = s1.degree() + 4 * d_H * cand.e_p * cand.m_s2;
            candidates.push_back(std::move(cand));
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const SearchCandidate& x, const SearchCandidate& y) { return x.degree < y.degree; });

    SqfCertificate best;
    bool have_best = false;
    for (const auto& cand : candidates) {
        long e_p = cand.e_p;
        for (int bump = 0; bump < 5; ++bump) {
            SqfParams par;
            par.n = n;
            par.k = k;
            par.mode = SqfMode::Search;
            par.e_g = cand.e_g;
            par.d_H = cand.d_H;
            par.e_p = e_p;
            par.m_s2 = cand.m_s2;
            par.C = cand.C;
            SqfCertificate attempt = assemble_sqf_certificate(n, k, par);
            if (attempt.passed) return attempt;
            if (!have_best || attempt.s.degree() < best.s.degree()) {
                best = attempt;
                have_best = true;
            }
            e_p = e_p + std::max<long>(2, e_p / 8);
        }
    }
    if (!have_best) throw std::runtime_error("sqf search produced no candidates");
    return best;
}

EvidencePtr certificate_for_shifted_roots(long n, long k, const Rational& a, const Rational& b,
                                          const SqfCertificate& base) {
    if (!(Rational(k - 1) <= a && a <= b && b <= Rational(k))) {
        throw std::invalid_argument("shifted roots need k-1 <= a <= b <= k");
    }
    if (!base.evidence_qk) throw std::invalid_argument("base certificate has no q_k evidence");
    Rational c1 = (Rational(k) - a) * (Rational(k) - b);
    Rational c2 = (a - Rational(k - 1)) * (b - Rational(k - 1));
    Rational c3 = (Rational(k) - a) * (b - Rational(k - 1)) + (Rational(k) - b) * (a - Rational(k - 1));
    if (c1 < 0 || c2 < 0 || c3 < 0) throw std::logic_error("shifted-root coefficients must be nonnegative");
    std::vector<EvidencePtr> kids;
    if (c1 != 0) kids.push_back(ev_product({ev_scalar(c1), ev_square(UniPoly::linear_root(Rational(k - 1)))}));
    if (c2 != 0) kids.push_back(ev_product({ev_scalar(c2), ev_square(UniPoly::linear_root(Rational(k)))}));
    if (c3 != 0) kids.push_back(ev_product({ev_scalar(c3), base.evidence_qk}));
    if (kids.empty()) kids.push_back(ev_scalar(Rational(0)));
    auto ev = ev_sum(std::move(kids));
    UniPoly target = UniPoly::linear_root(a) * UniPoly::linear_root(b);
    if (ev->claimed_poly != target) throw std::logic_error("shifted-root identity failed coefficientwise");
    (void)n;
    return ev;
}

}  // namespace soscert
