#include "soscert/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace soscert {

std::string to_string(SignVerdict v) {
    switch (v) {
        case SignVerdict::Nonnegative: return "nonnegative";
        case SignVerdict::Positive: return "positive";
        case SignVerdict::RootCount: return "root_count";
        case SignVerdict::Falsified: return "falsified";
    }
    return "?";
}

long SignCertificate::roots_with_multiplicity() const {
    long total = 0;
    for (const auto& [m, c] : multiplicity_counts) total += m * c;
    return total;
}

namespace {

// Divides out (den*x - num), assuming the rational num/den is a root.
ZPoly divide_out_rational_root(const ZPoly& p, const Rational& r) {
    ZPoly factor{Integer(-r.get_num()), Integer(r.get_den())};
    return zp::exact_div(p, factor);
}

// Synthetic division by (x - 1); remainder must vanish.
void divide_out_root_one(ZPoly& p) {
    if (p.size() < 2) throw std::logic_error("divide_out_root_one: degree < 1");
    // b_{d-1} = a_d; b_{i-1} = a_i + b_i; remainder a_0 + b_0 == 0
    ZPoly b(p.size() - 1);
    Integer carry = p.back();
    for (long i = static_cast<long>(p.size()) - 2; i >= 1; --i) {
        b[static_cast<std::size_t>(i)] = carry;
        carry += p[static_cast<std::size_t>(i)];
    }
    b[0] = carry;
    carry += p[0];
    if (carry != 0) throw std::logic_error("divide_out_root_one: not a root");
    p = std::move(b);
    zp::normalize(p);
}

void strip_root_at_zero(ZPoly& p) {
    std::size_t k = 0;
    while (k < p.size() && p[k] == 0) ++k;
    if (k > 0) p.erase(p.begin(), p.begin() + static_cast<long>(k));
}

// Integer image of sf(A + W t) * (common denominator)^deg.
ZPoly affine_compose_z(const ZPoly& p, const Rational& A, const Rational& W) {
    // L(t) = a1*w2 + a2*w1*t over the common denominator a2*w2.
    const Integer a1 = A.get_num(), a2 = A.get_den();
    const Integer w1 = W.get_num(), w2 = W.get_den();
    const Integer m = a2 * w2;
    ZPoly L{a1 * w2, a2 * w1};
    ZPoly acc{p.back()};
    Integer mp(1);
    for (long i = zp::degree(p) - 1; i >= 0; --i) {
        mp *= m;
        acc = zp::mul(acc, L);
        if (acc.empty()) acc.resize(1, Integer(0));
        acc[0] += p[static_cast<std::size_t>(i)] * mp;
        zp::normalize(acc);
    }
    return acc;
}

struct VcaCollector {
    std::vector<RootBox> out;  // in t-space over (0,1)
};

void vca_isolate(ZPoly q, const Rational& t_lo, const Rational& t_hi, VcaCollector& col, int depth) {
    if (depth > 4000) throw std::runtime_error("root isolation exceeded depth limit");
    int var = zp::descartes_01_bound(q);
    if (var == 0) return;
    if (var == 1) {
        col.out.push_back(RootBox{t_lo, t_hi, false});
        return;
    }
    ZPoly qL = q;
    zp::scale_half(qL);  // roots of qL in (0,1) <-> roots of q in (0,1/2)
    ZPoly qR = qL;
    zp::taylor_shift_1(qR);  // roots of qR in (0,1) <-> roots of q in (1/2,1)
    Rational tm = (t_lo + t_hi) / 2;
    if (!qR.empty() && qR[0] == 0) {
        col.out.push_back(RootBox{tm, tm, true});
        strip_root_at_zero(qR);
        divide_out_root_one(qL);
    }
    vca_isolate(std::move(qL), t_lo, tm, col, depth + 1);
    vca_isolate(std::move(qR), tm, t_hi, col, depth + 1);
}

}  // namespace

IsolationResult isolate_roots_open(const UniPoly& p, const IntervalQ& I) {
    if (p.is_zero()) throw std::invalid_argument("isolation of the zero polynomial");
    IsolationResult res;
    ZPoly sf = zp::squarefree_part(zp::from_unipoly(p));
    // Roots exactly at the endpoints are outside the open interval.
    while (zp::degree(sf) > 0 && zp::sign_at(sf, I.lo) == 0) sf = divide_out_rational_root(sf, I.lo);
    if (!I.is_point()) {
        while (zp::degree(sf) > 0 && zp::sign_at(sf, I.hi) == 0) sf = divide_out_rational_root(sf, I.hi);
    }
    res.squarefree = zp::to_unipoly(sf);
    if (I.is_point() || zp::degree(sf) < 1) return res;

    ZPoly q = affine_compose_z(sf, I.lo, I.width());
    strip_root_at_zero(q);  // cannot trigger: sf(lo) != 0
    VcaCollector col;
    vca_isolate(std::move(q), Rational(0), Rational(1), col, 0);
    std::sort(col.out.begin(), col.out.end(), [](const RootBox& a, const RootBox& b) { return a.lo < b.lo; });
    res.boxes.reserve(col.out.size());
    const Rational w = I.width();
    for (const auto& b : col.out) {
        res.boxes.push_back(RootBox{I.lo + w * b.lo, I.lo + w * b.hi, b.exact});
    }
    return res;
}

RootBox refine_root(const UniPoly& squarefree, const RootBox& box, const Rational& eps) {
    if (box.exact) return box;
    ZPoly sf = zp::from_unipoly(squarefree);
    Rational lo = box.lo, hi = box.hi;
    int s_lo = zp::sign_at(sf, lo);
    int s_hi = zp::sign_at(sf, hi);
    if (s_lo == 0 || s_hi == 0 || s_lo == s_hi) {
        throw std::logic_error("refine_root: box does not bracket a sign change");
    }
    while (hi - lo > eps) {
        Rational mid = (lo + hi) / 2;
        int s_mid = zp::sign_at(sf, mid);
        if (s_mid == 0) return RootBox{mid, mid, true};
        if (s_mid == s_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return RootBox{lo, hi, false};
}

namespace {

void attach_multiplicities(SignCertificate& cert, const ZPoly& z, const IntervalQ& I, bool use_sturm) {
    if (I.is_point()) return;  // (c, c] is empty
    auto factors = zp::yun_decomposition(z);
    for (std::size_t m = 0; m < factors.size(); ++m) {
        if (zp::degree(factors[m]) < 1) continue;
        long cnt;
        UniPoly fm = zp::to_unipoly(factors[m]);
        if (use_sturm) {
            auto chain = zp::sturm_chain(factors[m]);
            cnt = zp::sturm_count_halfopen(chain, I.lo, I.hi);
        } else {
            auto iso = isolate_roots_open(fm, I);
            cnt = static_cast<long>(iso.boxes.size()) + (fm(I.hi) == 0 ? 1 : 0);
        }
        if (cnt > 0) cert.multiplicity_counts.emplace_back(static_cast<int>(m + 1), cnt);
    }
}

}  // namespace

SignCertificate sturm_count_roots(const UniPoly& p, const IntervalQ& I) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count_roots: zero polynomial");
    SignCertificate cert;
    cert.poly = p;
    cert.interval = I;
    cert.method = "sturm";
    cert.sign_lo = sign(p(I.lo));
    cert.sign_hi = sign(p(I.hi));
    ZPoly z = zp::from_unipoly(p);
    auto chain = zp::sturm_chain(z);
    cert.sturm_sequence.reserve(chain.size());
    for (const auto& c : chain) cert.sturm_sequence.push_back(zp::to_unipoly(c));
    cert.variations_lo = zp::chain_variations_at(chain, I.lo);
    cert.variations_hi = zp::chain_variations_at(chain, I.hi);
    cert.root_count = cert.variations_lo - cert.variations_hi;
    cert.verdict = SignVerdict::RootCount;
    attach_multiplicities(cert, z, I, true);
    return cert;
}

SignCertificate descartes_count_roots(const UniPoly& p, const IntervalQ& I) {
    if (p.is_zero()) throw std::invalid_argument("descartes_count_roots: zero polynomial");
    SignCertificate cert;
    cert.poly = p;
    cert.interval = I;
    cert.method = "descartes";
    cert.sign_lo = sign(p(I.lo));
    cert.sign_hi = sign(p(I.hi));
    auto iso = isolate_roots_open(p, I);
    cert.isolating_intervals = iso.boxes;
    const bool hi_root = cert.sign_hi == 0 && !I.is_point();
    cert.root_count = static_cast<long>(iso.boxes.size()) + (hi_root ? 1 : 0);
    if (hi_root) {
        cert.isolating_intervals.push_back(RootBox{I.hi, I.hi, true});
    }
    cert.verdict = SignVerdict::RootCount;
    ZPoly z = zp::from_unipoly(p);
    attach_multiplicities(cert, z, I, false);
    return cert;
}

SignCertificate count_roots(const UniPoly& p, const IntervalQ& I) {
    return p.degree() <= kSturmDegreeLimit ? sturm_count_roots(p, I) : descartes_count_roots(p, I);
}

namespace {

// A rational point w inside (lo, hi) with p(w) != 0.
Rational interior_nonroot_sample(const UniPoly& p, const IntervalQ& I) {
    const long tries = p.degree() + 2;
    for (long j = 1; j <= tries; ++j) {
        Rational w = I.lo + I.width() * Rational(j, tries + 1);
        if (p(w) != 0) return w;
    }
    throw std::logic_error("no non-root sample found");  // impossible for nonzero p
}

// p changes sign across the single root inside box (isolated via oddpart);
// returns a rational point inside limits with p < 0.
Rational negative_witness_in_box(const UniPoly& p, const ZPoly& oddpart, RootBox box, const IntervalQ& limits) {
    Rational lo = box.lo, hi = box.hi;
    if (box.exact) {
        // Rational odd root w; p < 0 on one side nearby.
        const Rational& w = box.lo;
        Rational step = Rational(1, 4);
        for (int j = 0; j < 512; ++j) {
            for (int side : {-1, 1}) {
                Rational cand = w + side * step;
                if (cand > limits.lo && cand < limits.hi && p(cand) < 0) return cand;
            }
            step /= 2;
        }
        throw std::logic_error("no negative witness near odd root");
    }
    int s_lo = zp::sign_at(oddpart, lo);
    for (int j = 0; j < 512; ++j) {
        if (p(lo) < 0) return lo;
        if (p(hi) < 0) return hi;
        Rational mid = (lo + hi) / 2;
        int s_mid = zp::sign_at(oddpart, mid);
        if (s_mid == 0) {
            return negative_witness_in_box(p, oddpart, RootBox{mid, mid, true}, limits);
        }
        if (s_mid == s_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    throw std::logic_error("no negative witness found in box");
}

}  // namespace

SignCertificate prove_nonneg(const UniPoly& p, const IntervalQ& I, bool strict) {
    if (p.is_zero()) throw std::invalid_argument("prove_nonneg: identically zero input rejected");
    SignCertificate cert;
    cert.poly = p;
    cert.interval = I;
    cert.strict = strict;
    cert.method = "descartes";
    Rational v_lo = p(I.lo);
    Rational v_hi = p(I.hi);
    cert.sign_lo = sign(v_lo);
    cert.sign_hi = sign(v_hi);

    auto fail_at = [&](const Rational& x) {
        cert.verdict = SignVerdict::Falsified;
        cert.witness = x;
    };

    if (strict ? v_lo <= 0 : v_lo < 0) {
        fail_at(I.lo);
        return cert;
    }
    if (strict ? v_hi <= 0 : v_hi < 0) {
        fail_at(I.hi);
        return cert;
    }
    if (I.is_point()) {
        cert.verdict = strict ? SignVerdict::Positive : SignVerdict::Nonnegative;
        cert.method = "evaluation";
        return cert;
    }

    ZPoly z = zp::from_unipoly(p);
    if (strict) {
        // Endpoint values are > 0; positivity fails exactly when a root lies
        // in the open interval.
        auto iso = isolate_roots_open(p, I);
        cert.isolating_intervals = iso.boxes;
        if (!iso.boxes.empty()) {
            cert.verdict = SignVerdict::Falsified;
            // A rational witness with p <= 0 exists only if p actually dips
            // below zero; probe near the first root.
            RootBox tight = refine_root(iso.squarefree, iso.boxes.front(), Rational(1, 1 << 20));
            for (const Rational& cand : {tight.lo, tight.mid(), tight.hi}) {
                if (p(cand) <= 0) {
                    cert.witness = cand;
                    break;
                }
            }
            return cert;
        }
        cert.verdict = SignVerdict::Positive;
        if (p.degree() <= kSturmDegreeLimit) {
            auto chain = zp::sturm_chain(z);
            for (const auto& c : chain) cert.sturm_sequence.push_back(zp::to_unipoly(c));
            cert.variations_lo = zp::chain_variations_at(chain, I.lo);
            cert.variations_hi = zp::chain_variations_at(chain, I.hi);
        }
        return cert;
    }

    // Nonnegative iff no sign change inside and one interior sample is >= 0.
    ZPoly oddpart = zp::odd_multiplicity_part(z);
    UniPoly odd_uni = zp::to_unipoly(oddpart);
    if (!odd_uni.is_constant()) {
        auto iso = isolate_roots_open(odd_uni, I);
        cert.isolating_intervals = iso.boxes;
        if (!iso.boxes.empty()) {
            ZPoly sf_odd = zp::from_unipoly(iso.squarefree);
            cert.witness = negative_witness_in_box(p, sf_odd, iso.boxes.front(), I);
            cert.verdict = SignVerdict::Falsified;
            return cert;
        }
    }
    Rational w = interior_nonroot_sample(p, I);
    cert.sample_point = w;
    if (p(w) < 0) {
        fail_at(w);
        return cert;
    }
    cert.verdict = SignVerdict::Nonnegative;
    if (p.degree() <= kSturmDegreeLimit) {
        auto chain = zp::sturm_chain(z);
        for (const auto& c : chain) cert.sturm_sequence.push_back(zp::to_unipoly(c));
        cert.variations_lo = zp::chain_variations_at(chain, I.lo);
        cert.variations_hi = zp::chain_variations_at(chain, I.hi);
    }
    return cert;
}

namespace {

struct RatInterval {
    Rational lo, hi;
};

RatInterval iv_mul(const RatInterval& a, const RatInterval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)), std::max(std::max(p1, p2), std::max(p3, p4))};
}

RatInterval iv_round(const RatInterval& a, unsigned bits) {
    return {round_dyadic(a.lo, bits, -1), round_dyadic(a.hi, bits, +1)};
}

RatInterval horner_enclosure(const UniPoly& p, const RatInterval& x, unsigned bits) {
    RatInterval acc{Rational(0), Rational(0)};
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = iv_mul(acc, x);
        acc.lo += *it;
        acc.hi += *it;
        acc = iv_round(acc, bits);
    }
    return acc;
}

}  // namespace

IntervalQ interval_bound(const UniPoly& p, const IntervalQ& I, unsigned precision_bits) {
    if (precision_bits < 16) throw std::invalid_argument("interval_bound needs precision_bits >= 16");
    if (p.is_zero()) return IntervalQ(Rational(0), Rational(0));
    const int pieces = 8;
    Rational w = I.width() / pieces;
    RatInterval total{Rational(0), Rational(0)};
    bool first = true;
    for (int i = 0; i < pieces; ++i) {
        RatInterval piece{I.lo + w * i, (i == pieces - 1) ? I.hi : I.lo + w * (i + 1)};
        RatInterval e = horner_enclosure(p, piece, precision_bits);
        if (first) {
            total = e;
            first = false;
        } else {
            total.lo = std::min(total.lo, e.lo);
            total.hi = std::max(total.hi, e.hi);
        }
        if (I.is_point()) break;
    }
    return IntervalQ(total.lo, total.hi);
}

}  // namespace soscert
