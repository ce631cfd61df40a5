#include "soscert/sos_evidence.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace soscert {

namespace {

UniPoly x_poly() { return UniPoly{Rational(0), Rational(1)}; }

std::shared_ptr<SosEvidence> node(EvidenceKind k) {
    auto e = std::make_shared<SosEvidence>();
    e->kind = k;
    return e;
}

}  // namespace

UniPoly falling_factorial_poly(long k, char variant) {
    if (k < 1) throw std::invalid_argument("falling factorial axiom needs k >= 1");
    UniPoly prod = UniPoly::constant(1);
    long top = (variant == 'A') ? 2 * k - 1 : 2 * k;
    for (long i = 0; i <= top; ++i) prod = prod * UniPoly::linear_root(Rational(i));
    if (variant == 'B') prod = prod * UniPoly{Rational(1), Rational(1)};
    return prod;
}

EvidencePtr ev_square(UniPoly u) {
    auto e = node(EvidenceKind::Square);
    e->base = std::move(u);
    e->claimed_poly = e->base * e->base;
    e->claimed_degree = e->base.is_zero() ? 0 : 2 * e->base.degree();
    return e;
}

EvidencePtr ev_scalar(Rational c) {
    if (c < 0) throw std::invalid_argument("NonnegScalar must be >= 0");
    auto e = node(EvidenceKind::NonnegScalar);
    e->scalar = c;
    e->claimed_poly = UniPoly::constant(c);
    e->claimed_degree = 0;
    return e;
}

EvidencePtr ev_sum(std::vector<EvidencePtr> children) {
    if (children.empty()) throw std::invalid_argument("Sum needs children");
    auto e = node(EvidenceKind::Sum);
    UniPoly acc;
    long deg = 0;
    for (const auto& c : children) {
        acc = acc + c->claimed_poly;
        deg = std::max(deg, c->claimed_degree);
    }
    e->children = std::move(children);
    e->claimed_poly = std::move(acc);
    e->claimed_degree = deg;
    return e;
}

EvidencePtr ev_product(std::vector<EvidencePtr> children) {
    if (children.empty()) throw std::invalid_argument("Product needs children");
    auto e = node(EvidenceKind::Product);
    UniPoly acc = UniPoly::constant(1);
    long deg = 0;
    for (const auto& c : children) {
        acc = acc * c->claimed_poly;
        deg += c->claimed_degree;
    }
    e->children = std::move(children);
    e->claimed_poly = std::move(acc);
    e->claimed_degree = deg;
    return e;
}

EvidencePtr ev_even_power(UniPoly base, unsigned long exponent) {
    if (exponent % 2 != 0) throw std::invalid_argument("EvenPower needs an even exponent");
    auto e = node(EvidenceKind::EvenPower);
    e->base = std::move(base);
    e->exponent = exponent;
    e->claimed_poly = pow(e->base, exponent);
    e->claimed_degree = e->base.is_zero() ? 0 : static_cast<long>(exponent) * e->base.degree();
    return e;
}

EvidencePtr ev_varsum() {
    auto e = node(EvidenceKind::VarSumAxiom);
    e->claimed_poly = x_poly();
    e->claimed_degree = 2;
    return e;
}

EvidencePtr ev_complement(long n) {
    auto e = node(EvidenceKind::ComplementAxiom);
    e->n_param = n;
    e->claimed_poly = UniPoly::constant(Rational(n)) - x_poly();
    e->claimed_degree = 2;
    return e;
}

EvidencePtr ev_falling_factorial(long k, char variant) {
    if (variant != 'A' && variant != 'B') throw std::invalid_argument("falling factorial variant is A or B");
    auto e = node(EvidenceKind::FallingFactorialAxiom);
    e->ff_k = k;
    e->ff_variant = variant;
    e->claimed_poly = falling_factorial_poly(k, variant);
    e->claimed_degree = (variant == 'A') ? 2 * k : 2 * k + 2;
    return e;
}

EvidencePtr ev_lift(UniPoly p, long n, SignCertificate cert, std::optional<LiftPayload> payload) {
    auto e = node(EvidenceKind::IntervalNonnegLift);
    e->n_param = n;
    e->claimed_poly = std::move(p);
    e->claimed_degree = std::max<long>(0, e->claimed_poly.degree()) + 2;
    e->lift_cert = std::move(cert);
    e->lift_payload = std::move(payload);
    return e;
}

namespace {

struct Checker {
    long n;
    EvidenceCheckOptions opts;
    EvidenceCheckReport report;

    bool fail(const std::string& path, const std::string& msg) {
        report.valid = false;
        report.failing_path = path;
        report.message = msg;
        return false;
    }

    bool check(const SosEvidence& e, const std::string& path) {
        switch (e.kind) {
            case EvidenceKind::Square: {
                if (e.claimed_poly != e.base * e.base) return fail(path, "square does not match its base");
                long want = e.base.is_zero() ? 0 : 2 * e.base.degree();
                if (e.claimed_degree != want) return fail(path, "square degree tag mismatch");
                return true;
            }
            case EvidenceKind::NonnegScalar: {
                if (e.scalar < 0) return fail(path, "negative scalar");
                if (e.claimed_poly != UniPoly::constant(e.scalar)) return fail(path, "scalar claim mismatch");
                if (e.claimed_degree != 0) return fail(path, "scalar degree tag mismatch");
                return true;
            }
            case EvidenceKind::Sum: {
                UniPoly acc;
                long deg = 0;
                for (std::size_t i = 0; i < e.children.size(); ++i) {
                    if (!check(*e.children[i], path + ".children[" + std::to_string(i) + "]")) return false;
                    acc = acc + e.children[i]->claimed_poly;
                    deg = std::max(deg, e.children[i]->claimed_degree);
                }
                if (acc != e.claimed_poly) return fail(path, "sum of children does not equal the claim");
                if (deg != e.claimed_degree) return fail(path, "sum degree tag mismatch");
                return true;
            }
            case EvidenceKind::Product: {
                UniPoly acc = UniPoly::constant(1);
                long deg = 0;
                for (std::size_t i = 0; i < e.children.size(); ++i) {
                    if (!check(*e.children[i], path + ".children[" + std::to_string(i) + "]")) return false;
                    acc = acc * e.children[i]->claimed_poly;
                    deg += e.children[i]->claimed_degree;
                }
                if (acc != e.claimed_poly) return fail(path, "product of children does not equal the claim");
                if (deg != e.claimed_degree) return fail(path, "product degree tag mismatch");
                return true;
            }
            case EvidenceKind::EvenPower: {
                if (e.exponent % 2 != 0) return fail(path, "odd exponent in EvenPower");
                if (e.claimed_poly != pow(e.base, e.exponent)) return fail(path, "even power claim mismatch");
                long want = e.base.is_zero() ? 0 : static_cast<long>(e.exponent) * e.base.degree();
                if (e.claimed_degree != want) return fail(path, "even power degree tag mismatch");
                return true;
            }
            case EvidenceKind::VarSumAxiom: {
                if (e.claimed_poly != UniPoly{Rational(0), Rational(1)}) return fail(path, "VarSumAxiom must claim x");
                if (e.claimed_degree != 2) return fail(path, "VarSumAxiom degree tag must be 2");
                return true;
            }
            case EvidenceKind::ComplementAxiom: {
                if (e.n_param != n) return fail(path, "ComplementAxiom built for a different n");
                UniPoly want = UniPoly::constant(Rational(n)) - UniPoly{Rational(0), Rational(1)};
                if (e.claimed_poly != want) return fail(path, "ComplementAxiom must claim n - x");
                if (e.claimed_degree != 2) return fail(path, "ComplementAxiom degree tag must be 2");
                return true;
            }
            case EvidenceKind::FallingFactorialAxiom: {
                if (e.ff_k < 1) return fail(path, "falling factorial needs k >= 1");
                if (e.ff_variant != 'A' && e.ff_variant != 'B') return fail(path, "bad variant");
                if (e.claimed_poly != falling_factorial_poly(e.ff_k, e.ff_variant)) {
                    return fail(path, "falling factorial claim mismatch");
                }
                long want = (e.ff_variant == 'A') ? 2 * e.ff_k : 2 * e.ff_k + 2;
                if (e.claimed_degree != want) return fail(path, "falling factorial degree tag mismatch");
                // Sanity: nonnegative at every integer level 0..n.
                for (long j = 0; j <= n; ++j) {
                    if (e.claimed_poly(Rational(j)) < 0) return fail(path, "falling factorial negative at a level");
                }
                return true;
            }
            case EvidenceKind::IntervalNonnegLift: {
                if (e.n_param != n) return fail(path, "lift built for a different n");
                if (e.claimed_degree != std::max<long>(0, e.claimed_poly.degree()) + 2) {
                    return fail(path, "lift degree tag mismatch");
                }
                if (e.lift_cert.poly != e.claimed_poly) return fail(path, "lift certificate is for another polynomial");
                if (!(e.lift_cert.interval.lo == 0 && e.lift_cert.interval.hi == Rational(n))) {
                    return fail(path, "lift certificate interval is not [0, n]");
                }
                if (!(e.lift_cert.verdict == SignVerdict::Nonnegative || e.lift_cert.verdict == SignVerdict::Positive)) {
                    return fail(path, "lift certificate verdict is not nonnegative");
                }
                if (opts.reverify_lifts) {
                    auto re = prove_nonneg(e.claimed_poly, e.lift_cert.interval);
                    if (!re.passed()) return fail(path, "lift reverification failed");
                }
                if (e.lift_payload) {
                    const LiftPayload& pl = *e.lift_payload;
                    for (const auto& [c, q] : pl.s_terms) {
                        if (c < 0) return fail(path, "negative coefficient in lift s-part");
                        (void)q;
                    }
                    for (const auto& [c, q] : pl.t_terms) {
                        if (c < 0) return fail(path, "negative coefficient in lift t-part");
                        (void)q;
                    }
                    UniPoly s, t;
                    for (const auto& [c, q] : pl.s_terms) s = s + c * (q * q);
                    for (const auto& [c, q] : pl.t_terms) t = t + c * (q * q);
                    UniPoly xp{Rational(0), Rational(1)};
                    UniPoly assembled;
                    if (pl.even_form) {
                        assembled = s + xp * (UniPoly::constant(Rational(n)) - xp) * t;
                    } else {
                        assembled = xp * s + (UniPoly::constant(Rational(n)) - xp) * t;
                    }
                    UniPoly resid = e.claimed_poly - assembled;
                    if (!resid.is_zero()) {
                        // Same enclosure precision the construction used, so a
                        // truthful declared bound always revalidates.
                        IntervalQ enc = interval_bound(resid, e.lift_cert.interval, 128);
                        Rational mag = std::max(abs_rational(enc.lo), abs_rational(enc.hi));
                        if (mag > pl.residual_bound) return fail(path, "lift residual exceeds its declared bound");
                    }
                }
                return true;
            }
        }
        return fail(path, "unknown node kind");
    }
};

}  // namespace

EvidenceCheckReport check_evidence(const EvidencePtr& e, long n, const EvidenceCheckOptions& opts) {
    Checker ck;
    ck.n = n;
    ck.opts = opts;
    ck.report.valid = true;
    if (!e) {
        ck.report.valid = false;
        ck.report.message = "empty evidence";
        return ck.report;
    }
    if (ck.check(*e, "root")) {
        ck.report.valid = true;
        ck.report.total_degree = e->claimed_degree;
    }
    return ck.report;
}

namespace {

nlohmann::json poly_to_json(const UniPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(rational_to_string(c));
    return arr;
}

nlohmann::json evidence_json(const SosEvidence& e) {
    nlohmann::json j;
    switch (e.kind) {
        case EvidenceKind::Square: j["kind"] = "Square"; j["base"] = poly_to_json(e.base); break;
        case EvidenceKind::NonnegScalar: j["kind"] = "NonnegScalar"; j["value"] = rational_to_string(e.scalar); break;
        case EvidenceKind::Sum: j["kind"] = "Sum"; break;
        case EvidenceKind::Product: j["kind"] = "Product"; break;
        case EvidenceKind::EvenPower:
            j["kind"] = "EvenPower";
            j["base"] = poly_to_json(e.base);
            j["exponent"] = e.exponent;
            break;
        case EvidenceKind::VarSumAxiom: j["kind"] = "VarSumAxiom"; break;
        case EvidenceKind::ComplementAxiom: j["kind"] = "ComplementAxiom"; j["n"] = e.n_param; break;
        case EvidenceKind::FallingFactorialAxiom:
            j["kind"] = "FallingFactorialAxiom";
            j["k"] = e.ff_k;
            j["variant"] = std::string(1, e.ff_variant);
            break;
        case EvidenceKind::IntervalNonnegLift: {
            j["kind"] = "IntervalNonnegLift";
            j["n"] = e.n_param;
            j["verdict"] = to_string(e.lift_cert.verdict);
            if (e.lift_payload) {
                nlohmann::json pl;
                pl["form"] = e.lift_payload->even_form ? "even" : "odd";
                pl["residual_bound"] = rational_to_string(e.lift_payload->residual_bound);
                nlohmann::json st = nlohmann::json::array();
                for (const auto& [c, q] : e.lift_payload->s_terms) {
                    st.push_back({{"coef", rational_to_string(c)}, {"poly", poly_to_json(q)}});
                }
                nlohmann::json tt = nlohmann::json::array();
                for (const auto& [c, q] : e.lift_payload->t_terms) {
                    tt.push_back({{"coef", rational_to_string(c)}, {"poly", poly_to_json(q)}});
                }
                pl["s_terms"] = std::move(st);
                pl["t_terms"] = std::move(tt);
                j["payload"] = std::move(pl);
            }
            break;
        }
    }
    j["claimed_degree"] = e.claimed_degree;
    j["claimed_poly"] = poly_to_json(e.claimed_poly);
    if (!e.children.empty()) {
        nlohmann::json kids = nlohmann::json::array();
        for (const auto& c : e.children) kids.push_back(evidence_json(*c));
        j["children"] = std::move(kids);
    }
    return j;
}

}  // namespace

std::string evidence_to_json(const EvidencePtr& e, int indent) {
    nlohmann::json j = e ? evidence_json(*e) : nlohmann::json();
    return indent >= 0 ? j.dump(indent) : j.dump();
}

}  // namespace soscert
