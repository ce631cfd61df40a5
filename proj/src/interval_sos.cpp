#include "soscert/interval_sos.hpp"

#include <algorithm>
#include <stdexcept>

#include "soscert/aberth.hpp"
#include "soscert/intpoly.hpp"

namespace soscert {

long IntervalSosDecomposition::s_degree() const {
    long d = 0;
    for (const auto& [c, q] : s_terms) {
        if (c != 0 && !q.is_zero()) d = std::max(d, 2 * q.degree());
    }
    return d;
}

long IntervalSosDecomposition::t_degree() const {
    long d = 0;
    for (const auto& [c, q] : t_terms) {
        if (c != 0 && !q.is_zero()) d = std::max(d, 2 * q.degree());
    }
    return d;
}

namespace {

struct XTerm {
    Rational coef;  // >= 0
    UniPoly q;      // polynomial in x
    long e_u;       // exponent of (x - a)
    long e_v;       // exponent of (b - x)
};

// q(u/v) * v^deg(q) as a polynomial in x, for u = x - a, v = b - x.
UniPoly pullback(const UniPoly& q, const Rational& a, const Rational& b) {
    UniPoly u{-a, Rational(1)};
    UniPoly v{b, Rational(-1)};
    UniPoly acc;
    UniPoly upow = UniPoly::constant(1);
    long d = q.degree();
    if (d < 0) return UniPoly();
    std::vector<UniPoly> vpow(static_cast<std::size_t>(d) + 1);
    vpow[0] = UniPoly::constant(1);
    for (long k = 1; k <= d; ++k) vpow[static_cast<std::size_t>(k)] = vpow[static_cast<std::size_t>(k - 1)] * v;
    for (long k = 0; k <= d; ++k) {
        if (q.coeff(static_cast<std::size_t>(k)) != 0) {
            acc = acc + q.coeff(static_cast<std::size_t>(k)) * upow * vpow[static_cast<std::size_t>(d - k)];
        }
        if (k < d) upow = upow * u;
    }
    return acc;
}

void round_poly_inplace(std::vector<Rational>& cs, unsigned bits) {
    for (auto& c : cs) {
        if (c == 0) continue;
        // round to nearest dyadic; direction does not matter for construction
        c = round_dyadic(c, bits, sign(c) > 0 ? +1 : -1);
    }
}

struct Construction {
    std::vector<XTerm> terms;
};

// One attempt at the given working precision; throws on classification
// failures so the caller can retry with more bits.
Construction construct_terms(const UniPoly& core2, const Rational& a, const Rational& b, unsigned bits) {
    const long dc = core2.degree();
    Construction out;
    if (dc == 0) {
        XTerm t;
        t.coef = core2.coeff(0);
        if (t.coef < 0) throw std::logic_error("constant core must be positive");
        t.q = UniPoly::constant(1);
        t.e_u = 0;
        t.e_v = 0;
        out.terms.push_back(std::move(t));
        return out;
    }

    auto roots = find_complex_roots(core2, bits);
    const Rational radius = pow2_rational(-static_cast<long>(bits) / 2);

    // Conjugate matching in x-space: pair each root of positive imaginary
    // part with its nearest negative-part mirror when they sit within the
    // noise radius; everything unpaired is treated as real. True real roots
    // come back from the iteration with tiny imaginary noise of arbitrary
    // sign, so a raw sign split cannot work.
    const std::size_t m_roots = roots.size();
    std::vector<char> used(m_roots, 0);
    std::vector<std::pair<Rational, Rational>> x_pairs;  // (re, im > 0)
    std::vector<Rational> x_reals;
    for (std::size_t i = 0; i < m_roots; ++i) {
        if (used[i] || !(roots[i].im > 0)) continue;
        Rational scale = Rational(1) + abs_rational(roots[i].re) + roots[i].im;
        Rational best_dist;
        std::size_t best_j = m_roots;
        for (std::size_t j = 0; j < m_roots; ++j) {
            if (j == i || used[j] || !(roots[j].im < 0)) continue;
            Rational dist = abs_rational(roots[i].re - roots[j].re) + abs_rational(roots[i].im + roots[j].im);
            if (best_j == m_roots || dist < best_dist) {
                best_dist = dist;
                best_j = j;
            }
        }
        if (best_j < m_roots && best_dist <= radius * scale) {
            used[i] = used[best_j] = 1;
            Rational re = (roots[i].re + roots[best_j].re) / 2;
            Rational im = (roots[i].im - roots[best_j].im) / 2;
            x_pairs.emplace_back(round_dyadic(re, bits + 32, +1), round_dyadic(im, bits + 32, +1));
        }
    }
    for (std::size_t i = 0; i < m_roots; ++i) {
        if (!used[i]) x_reals.push_back(round_dyadic(roots[i].re, bits + 32, +1));
    }
    if (static_cast<long>(x_pairs.size()) * 2 + static_cast<long>(x_reals.size()) != dc) {
        throw std::runtime_error("root classification lost degrees; retry");
    }

    // Map to y = (x-a)/(b-x); conjugation commutes with the real Moebius map.
    std::vector<std::pair<Rational, Rational>> upper;
    std::vector<Rational> alphas;
    for (const auto& [re, im] : x_pairs) {
        Rational u = re - a;
        Rational sden = b - re;
        Rational D = sden * sden + im * im;
        if (D == 0) throw std::runtime_error("root collided with interval endpoint; retry");
        Rational y_re = (u * sden - im * im) / D;
        Rational y_im = im * (b - a) / D;
        if (!(y_im > 0)) throw std::runtime_error("pair mapping lost orientation; retry");
        upper.emplace_back(round_dyadic(y_re, bits + 32, +1), round_dyadic(y_im, bits + 32, +1));
    }
    for (const auto& re : x_reals) {
        if (re == b) throw std::runtime_error("real root collided with the right endpoint; retry");
        Rational y = (re - a) / (b - re);
        Rational alpha = -y;
        if (alpha < 0) {
            Rational scale = Rational(1) + abs_rational(y);
            if (alpha > -radius * scale) {
                alpha = 0;  // boundary-root noise
            } else {
                throw std::runtime_error("real root classified inside the interval; retry");
            }
        }
        alphas.push_back(round_dyadic(alpha, bits + 32, +1));
    }

    // W = prod (y - y_j) over the upper half, as Wre + i Wim; monic by
    // construction, coefficients rounded along the way.
    std::vector<Rational> wre{Rational(1)};
    std::vector<Rational> wim{Rational(0)};
    for (const auto& [yr, yi] : upper) {
        std::size_t sz = wre.size() + 1;
        std::vector<Rational> nre(sz, Rational(0)), nim(sz, Rational(0));
        for (std::size_t k = 0; k + 1 < sz; ++k) {
            // (wre[k] + i wim[k]) * (y - (yr + i yi)) contributes:
            nre[k + 1] += wre[k];
            nim[k + 1] += wim[k];
            nre[k] += -(wre[k] * yr) + wim[k] * yi;
            nim[k] += -(wim[k] * yr) - wre[k] * yi;
        }
        round_poly_inplace(nre, bits + 32);
        round_poly_inplace(nim, bits + 32);
        wre = std::move(nre);
        wim = std::move(nim);
    }

    // Areal = prod (y + alpha_j): nonnegative coefficients.
    std::vector<Rational> areal{Rational(1)};
    for (const auto& alpha : alphas) {
        std::vector<Rational> na(areal.size() + 1, Rational(0));
        for (std::size_t k = 0; k < areal.size(); ++k) {
            na[k + 1] += areal[k];
            na[k] += areal[k] * alpha;
        }
        round_poly_inplace(na, bits + 32);
        areal = std::move(na);
    }

    // Leading coefficient of the Goursat image of core2 is core2(b).
    Rational c = core2(b);
    if (c <= 0) throw std::logic_error("core polynomial not positive at the right endpoint");

    UniPoly Wre(wre), Wim(wim);
    const long degW = Wre.degree();  // W is monic, so Wre carries the degree
    UniPoly v_poly{b, Rational(-1)};
    UniPoly WreX = pullback(Wre, a, b);
    UniPoly WimX = pullback(Wim, a, b);
    // Pad Wim's image with v powers so both parts sit at homogeneous degree degW.
    if (!WimX.is_zero()) {
        for (long i = Wim.degree(); i < degW; ++i) WimX = WimX * v_poly;
    }

    // Terms: c * a_k * (W* y^(k/2))^2 * y^(k mod 2), pulled back to x with the
    // global v^(dc - 2*degterm - e) filler and the 1/(b-a)^dc scale.
    Rational scale_div = pow_rational(Rational(1) / (b - a), static_cast<unsigned long>(dc));
    UniPoly u_poly{-a, Rational(1)};
    std::vector<UniPoly> upow{UniPoly::constant(1)};
    auto u_to = [&](long e) -> const UniPoly& {
        while (static_cast<long>(upow.size()) <= e) upow.push_back(upow.back() * u_poly);
        return upow[static_cast<std::size_t>(e)];
    };

    for (std::size_t k = 0; k < areal.size(); ++k) {
        if (areal[k] == 0) continue;
        if (areal[k] < 0) throw std::logic_error("negative coefficient in the outside-root product");
        long j = static_cast<long>(k) / 2;
        int e = static_cast<int>(k % 2);
        // Q(y) = W* (y^j); x-image carries v^(degW - deg component + j)
        for (int part = 0; part < 2; ++part) {
            const UniPoly& Wpart_x = (part == 0) ? WreX : WimX;
            if (Wpart_x.is_zero()) continue;
            // x-image of W y^j: Wpart_x * u^j, homogeneous y-degree degW + j
            UniPoly qx = Wpart_x * u_to(j);
            long y_deg = degW + j;
            long g = dc - 2 * y_deg - e;
            if (g < 0) throw std::logic_error("negative filler exponent");
            XTerm t;
            t.coef = c * areal[k] * scale_div;
            t.q = std::move(qx);
            t.e_u = e;
            t.e_v = g;
            out.terms.push_back(std::move(t));
        }
    }
    return out;
}

}  // namespace

IntervalSosDecomposition decompose_on_interval(const UniPoly& p, const IntervalQ& I, unsigned precision_bits) {
    if (p.is_zero()) throw std::invalid_argument("decompose_on_interval: zero polynomial");
    if (I.is_point()) throw std::invalid_argument("decompose_on_interval: needs a < b");
    auto pre = prove_nonneg(p, I);
    if (!pre.passed()) {
        throw std::runtime_error("decompose_on_interval: polynomial is not nonnegative on the interval");
    }

    IntervalSosDecomposition dec;
    dec.p = p;
    dec.interval = I;
    dec.even_parity = (p.degree() % 2 == 0);

    const Rational a = I.lo, b = I.hi;
    UniPoly u_poly{-a, Rational(1)};
    UniPoly v_poly{b, Rational(-1)};

    // p = SQ^2 * (x-a)^eu * (b-x)^ev * core2 with core2 > 0 on [a, b]:
    // even-multiplicity content goes into SQ, boundary roots are stripped from
    // the square-free odd part, and what remains is root-free on the interval.
    ZPoly z = zp::from_unipoly(p);
    auto yun = zp::yun_decomposition(z);
    UniPoly SQ = UniPoly::constant(1);
    for (std::size_t m = 0; m < yun.size(); ++m) {
        long half = static_cast<long>(m + 1) / 2;
        if (half > 0 && zp::degree(yun[m]) > 0) {
            SQ = SQ * pow(zp::to_unipoly(yun[m]), static_cast<unsigned long>(half));
        }
    }
    UniPoly podd = exact_div(p, SQ * SQ);
    long e_u = 0, e_v = 0;
    while (!podd.is_constant() && podd(a) == 0) {
        podd = exact_div(podd, u_poly);
        ++e_u;
    }
    while (!podd.is_constant() && podd(b) == 0) {
        podd = exact_div(podd, UniPoly::linear_root(b));
        ++e_v;
    }
    // Absorb the sign of (x-b)^ev = (-(b-x))^ev.
    UniPoly core2 = (e_v % 2 == 1) ? Rational(-1) * podd : podd;
    if (core2(I.mid()) <= 0) throw std::logic_error("core polynomial not positive inside the interval");

    // Construction attempts with growing precision.
    Rational target = pow2_rational(-static_cast<long>(precision_bits)) * coeff_norm_inf(p);
    unsigned bits = precision_bits + 64;
    for (int attempt = 0; attempt < 4; ++attempt, bits *= 2) {
        Construction cons;
        try {
            cons = construct_terms(core2, a, b, bits);
        } catch (const std::runtime_error&) {
            continue;
        }
        // Fold prefactors into every term: q *= SQ, exponents shift.
        std::vector<XTerm> terms = std::move(cons.terms);
        for (auto& t : terms) {
            if (!SQ.is_constant() || SQ.coeff(0) != 1) t.q = t.q * SQ;
            t.e_u += e_u;
            t.e_v += e_v;
        }
        // Bucket reduction into the parity-appropriate two-slot form.
        std::vector<std::pair<Rational, UniPoly>> s_terms, t_terms;
        Rational inv_w = Rational(1) / (b - a);
        auto add_term = [&](std::vector<std::pair<Rational, UniPoly>>& dst, const Rational& cc, UniPoly qq) {
            if (cc == 0 || qq.is_zero()) return;
            dst.emplace_back(cc, std::move(qq));
        };
        for (auto& t : terms) {
            // Move even parts of the affine exponents inside the square.
            UniPoly q = std::move(t.q);
            if (t.e_u >= 2) {
                q = q * pow(u_poly, static_cast<unsigned long>(t.e_u / 2));
            }
            if (t.e_v >= 2) {
                q = q * pow(v_poly, static_cast<unsigned long>(t.e_v / 2));
            }
            int ru = static_cast<int>(t.e_u % 2);
            int rv = static_cast<int>(t.e_v % 2);
            if (dec.even_parity) {
                if (ru == 0 && rv == 0) {
                    add_term(s_terms, t.coef, q);
                } else if (ru == 1 && rv == 1) {
                    add_term(t_terms, t.coef, q);
                } else if (ru == 1) {
                    // u = (u^2 + uv)/(b-a)
                    add_term(s_terms, t.coef * inv_w, q * u_poly);
                    add_term(t_terms, t.coef * inv_w, q);
                } else {
                    // v = (v^2 + uv)/(b-a)
                    add_term(s_terms, t.coef * inv_w, q * v_poly);
                    add_term(t_terms, t.coef * inv_w, q);
                }
            } else {
                if (ru == 1 && rv == 0) {
                    add_term(s_terms, t.coef, q);
                } else if (ru == 0 && rv == 1) {
                    add_term(t_terms, t.coef, q);
                } else if (ru == 0 && rv == 0) {
                    // 1 = (u + v)/(b-a)
                    add_term(s_terms, t.coef * inv_w, q);
                    add_term(t_terms, t.coef * inv_w, q);
                } else {
                    // uv = ((Qv)^2 u + (Qu)^2 v)/(b-a)
                    add_term(s_terms, t.coef * inv_w, q * v_poly);
                    add_term(t_terms, t.coef * inv_w, q * u_poly);
                }
            }
        }
        // Assemble and bound the residual exactly.
        UniPoly S, T;
        for (const auto& [cc, qq] : s_terms) S = S + cc * (qq * qq);
        for (const auto& [cc, qq] : t_terms) T = T + cc * (qq * qq);
        UniPoly assembled = dec.even_parity ? S + u_poly * v_poly * T : u_poly * S + v_poly * T;
        UniPoly resid = p - assembled;
        Rational bound(0);
        if (!resid.is_zero()) {
            IntervalQ enc = interval_bound(resid, I, 128);
            bound = std::max(abs_rational(enc.lo), abs_rational(enc.hi));
        }
        if (bound <= target) {
            dec.s_terms = std::move(s_terms);
            dec.t_terms = std::move(t_terms);
            dec.assembled = std::move(assembled);
            dec.residual = std::move(resid);
            dec.residual_bound = bound;
            dec.precision_bits_used = bits;
            // Degree bookkeeping of the two-slot theorem.
            long cap = 2 * ((p.degree() + 1) / 2);
            if (dec.s_degree() > cap || dec.t_degree() > std::max<long>(0, cap - 2)) {
                throw std::logic_error("decomposition exceeded its degree budget");
            }
            return dec;
        }
    }
    throw std::runtime_error("decompose_on_interval: residual bound not met; raise precision_bits");
}

EvidencePtr lift_nonneg_to_hypercube(const UniPoly& p, long n, unsigned precision_bits, bool materialize,
                                     const SignCertificate* precomputed) {
    if (n < 1) throw std::invalid_argument("lift needs n >= 1");
    if (p.is_zero()) {
        return ev_scalar(Rational(0));
    }
    if (p.is_constant()) {
        Rational c = p.coeff(0);
        if (c < 0) throw std::runtime_error("lift of a negative constant");
        if (c == 1) return ev_square(UniPoly::constant(1));
        return ev_scalar(c);
    }
    // c * x (n - x) with c > 0.
    if (p.degree() == 2 && p(Rational(0)) == 0 && p(Rational(n)) == 0 && p.leading() < 0) {
        Rational c = -p.leading();
        std::vector<EvidencePtr> kids;
        if (c != 1) kids.push_back(ev_scalar(c));
        kids.push_back(ev_varsum());
        kids.push_back(ev_complement(n));
        return ev_product(std::move(kids));
    }
    IntervalQ I(Rational(0), Rational(n));
    const bool reuse = precomputed != nullptr && precomputed->poly == p && precomputed->interval.lo == I.lo &&
                       precomputed->interval.hi == I.hi;
    auto cert = reuse ? *precomputed : prove_nonneg(p, I);
    if (!cert.passed()) {
        std::string msg = "lift_nonneg_to_hypercube: polynomial negative on [0,n]";
        if (cert.witness) msg += " at x = " + rational_to_string(*cert.witness);
        throw std::runtime_error(msg);
    }
    std::optional<LiftPayload> payload;
    if (materialize) {
        auto dec = decompose_on_interval(p, I, precision_bits);
        LiftPayload pl;
        pl.even_form = dec.even_parity;
        pl.s_terms = dec.s_terms;
        pl.t_terms = dec.t_terms;
        pl.residual_bound = dec.residual_bound;
        payload = std::move(pl);
    }
    return ev_lift(p, n, std::move(cert), std::move(payload));
}

}  // namespace soscert
