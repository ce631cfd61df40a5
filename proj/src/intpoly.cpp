#include "soscert/intpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace soscert {
namespace zp {

void normalize(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly from_unipoly(const UniPoly& p) {
    ZPoly out;
    if (p.is_zero()) return out;
    Integer den(1);
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(Integer(c.get_num() * (den / c.get_den())));
    Integer g = content(out);
    if (g > 1) {
        for (auto& z : out) z /= g;
    }
    return out;
}

UniPoly to_unipoly(const ZPoly& p) {
    std::vector<Rational> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = Rational(p[i]);
    return UniPoly(std::move(c));
}

ZPoly derivative(const ZPoly& p) {
    if (p.size() <= 1) return {};
    ZPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = Integer(static_cast<long>(i)) * p[i];
    return d;
}

ZPoly neg(ZPoly p) {
    for (auto& c : p) c = -c;
    return p;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    normalize(r);
    return r;
}

int sign_at(const ZPoly& p, const Rational& x) {
    if (p.empty()) return 0;
    // Homogeneous Horner: sign of sum c_i a^i b^(d-i) for x = a/b, b > 0.
    const Integer& a = x.get_num();
    const Integer& b = x.get_den();
    Integer acc = p.back();
    Integer bp(1);
    for (long i = degree(p) - 1; i >= 0; --i) {
        bp *= b;
        acc = acc * a + p[static_cast<std::size_t>(i)] * bp;
    }
    return sgn(acc);
}

Rational value_at(const ZPoly& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc *= x;
        acc += Rational(*it);
    }
    return acc;
}

Integer content(const ZPoly& p) {
    Integer g(0);
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly primitive_part(const ZPoly& p) {
    if (p.empty()) return {};
    Integer g = content(p);
    ZPoly out(p);
    if (g > 1) {
        for (auto& c : out) c /= g;
    }
    return out;
}

void taylor_shift_1(ZPoly& p) {
    const long d = degree(p);
    for (long i = 0; i < d; ++i) {
        for (long j = d - 1; j >= i; --j) {
            p[static_cast<std::size_t>(j)] += p[static_cast<std::size_t>(j + 1)];
        }
    }
}

void scale_half(ZPoly& p) {
    const long d = degree(p);
    for (long i = 0; i < d; ++i) {
        mpz_mul_2exp(p[static_cast<std::size_t>(i)].get_mpz_t(), p[static_cast<std::size_t>(i)].get_mpz_t(),
                     static_cast<unsigned long>(d - i));
    }
}

ZPoly reversed(const ZPoly& p) {
    ZPoly r(p.rbegin(), p.rend());
    normalize(r);
    return r;
}

int coeff_sign_variations(const ZPoly& p) {
    int var = 0;
    int last = 0;
    for (const auto& c : p) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

int descartes_01_bound(const ZPoly& p) {
    ZPoly r = reversed(p);
    taylor_shift_1(r);
    return coeff_sign_variations(r);
}

// ---- modular gcd ----------------------------------------------------------

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<u128>(a) * b) % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 m) { return powmod(a % m, m - 2, m); }

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 prev_prime(u64 n) {
    if ((n & 1) == 0) --n;
    while (!is_prime_u64(n)) n -= 2;
    return n;
}

using FpPoly = std::vector<u64>;

void fp_normalize(FpPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

FpPoly fp_from_z(const ZPoly& p, u64 m) {
    FpPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        Integer r = p[i] % static_cast<unsigned long>(m);
        if (r < 0) r += static_cast<unsigned long>(m);
        out[i] = r.get_ui();
    }
    fp_normalize(out);
    return out;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 m) {
    fp_normalize(a);
    fp_normalize(b);
    while (!b.empty()) {
        u64 inv_lead = invmod(b.back(), m);
        while (a.size() >= b.size()) {
            u64 top = a.back();
            if (top != 0) {
                u64 f = mulmod(top, inv_lead, m);
                std::size_t off = a.size() - b.size();
                for (std::size_t i = 0; i < b.size(); ++i) {
                    u64 sub = mulmod(f, b[i], m);
                    u64& slot = a[off + i];
                    slot = (slot >= sub) ? slot - sub : slot + m - sub;
                }
            }
            a.pop_back();
            fp_normalize(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        u64 inv_lead = invmod(a.back(), m);
        for (auto& c : a) c = mulmod(c, inv_lead, m);
    }
    return a;
}

bool try_exact_div(const ZPoly& a, const ZPoly& b, ZPoly* quot_out) {
    if (is_zero(b)) return false;
    if (is_zero(a)) {
        if (quot_out) quot_out->clear();
        return true;
    }
    long da = degree(a), db = degree(b);
    if (da < db) return false;
    ZPoly rem(a);
    ZPoly quot(static_cast<std::size_t>(da - db) + 1, Integer(0));
    const Integer& lead = b.back();
    for (long dr = da; dr >= db; --dr) {
        Integer& top = rem[static_cast<std::size_t>(dr)];
        if (top == 0) continue;
        Integer f, r;
        mpz_tdiv_qr(f.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) return false;
        quot[static_cast<std::size_t>(dr - db)] = f;
        for (long i = 0; i <= db; ++i) {
            rem[static_cast<std::size_t>(dr - db + i)] -= f * b[static_cast<std::size_t>(i)];
        }
    }
    normalize(rem);
    if (!rem.empty()) return false;
    normalize(quot);
    if (quot_out) *quot_out = std::move(quot);
    return true;
}

}  // namespace

ZPoly exact_div(const ZPoly& a, const ZPoly& b) {
    ZPoly q;
    if (!try_exact_div(a, b, &q)) throw std::logic_error("integer polynomial division not exact");
    return q;
}

ZPoly gcd(const ZPoly& a_in, const ZPoly& b_in) {
    ZPoly a = primitive_part(a_in);
    ZPoly b = primitive_part(b_in);
    if (is_zero(a)) {
        if (!b.empty() && b.back() < 0) b = neg(std::move(b));
        return b;
    }
    if (is_zero(b)) {
        if (a.back() < 0) a = neg(std::move(a));
        return a;
    }
    if (degree(a) == 0 || degree(b) == 0) return {Integer(1)};
    Integer lc_gcd;
    mpz_gcd(lc_gcd.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

    long best_deg = std::min(degree(a), degree(b)) + 1;
    std::vector<Integer> crt;
    Integer modulus(1);
    u64 prime = (1ULL << 62);
    const int kMaxPrimes = 4096;  // plenty: gcds in this codebase are tiny
    for (int iter = 0; iter < kMaxPrimes; ++iter) {
        prime = prev_prime(prime - 1);
        u64 m = prime;
        if (mpz_divisible_ui_p(a.back().get_mpz_t(), static_cast<unsigned long>(m)) ||
            mpz_divisible_ui_p(b.back().get_mpz_t(), static_cast<unsigned long>(m))) {
            continue;
        }
        FpPoly g = fp_gcd(fp_from_z(a, m), fp_from_z(b, m), m);
        long dg = static_cast<long>(g.size()) - 1;
        if (dg <= 0) return {Integer(1)};  // modular degree only overestimates
        if (dg < best_deg) {
            best_deg = dg;
            crt.clear();
            modulus = 1;
        } else if (dg > best_deg) {
            continue;  // unlucky prime
        }
        Integer lcg_mod = lc_gcd % static_cast<unsigned long>(m);
        if (lcg_mod < 0) lcg_mod += static_cast<unsigned long>(m);
        u64 scale = lcg_mod.get_ui() % m;
        std::vector<Integer> img(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            img[i] = Integer(static_cast<unsigned long>(mulmod(g[i], scale, m)));
        }
        if (crt.empty()) {
            crt = std::move(img);
            modulus = static_cast<unsigned long>(m);
        } else {
            Integer m_big(static_cast<unsigned long>(m));
            Integer inv;
            Integer mod_red = modulus % m_big;
            mpz_invert(inv.get_mpz_t(), mod_red.get_mpz_t(), m_big.get_mpz_t());
            for (std::size_t i = 0; i < crt.size(); ++i) {
                Integer cur = crt[i] % m_big;
                if (cur < 0) cur += m_big;
                Integer diff = (img[i] - cur) % m_big;
                if (diff < 0) diff += m_big;
                crt[i] += modulus * ((diff * inv) % m_big);
            }
            modulus *= m_big;
        }
        ZPoly cand(crt.size());
        Integer half = modulus / 2;
        for (std::size_t i = 0; i < crt.size(); ++i) {
            Integer c = crt[i] % modulus;
            if (c < 0) c += modulus;
            if (c > half) c -= modulus;
            cand[i] = c;
        }
        normalize(cand);
        if (!cand.empty() && degree(cand) == best_deg) {
            cand = primitive_part(cand);
            if (cand.back() < 0) cand = neg(std::move(cand));
            if (try_exact_div(a, cand, nullptr) && try_exact_div(b, cand, nullptr)) return cand;
        }
    }
    throw std::runtime_error("modular gcd failed to stabilize");
}

ZPoly squarefree_part(const ZPoly& p_in) {
    ZPoly p = primitive_part(p_in);
    if (is_zero(p)) throw std::invalid_argument("squarefree part of zero");
    if (p.back() < 0) p = neg(std::move(p));
    if (degree(p) <= 1) return p;
    ZPoly g = gcd(p, derivative(p));
    if (degree(g) == 0) return p;
    ZPoly sf = primitive_part(exact_div(p, g));
    if (!sf.empty() && sf.back() < 0) sf = neg(std::move(sf));
    return sf;
}

std::vector<ZPoly> yun_decomposition(const ZPoly& p_in) {
    std::vector<ZPoly> factors;
    ZPoly p = primitive_part(p_in);
    if (is_zero(p)) throw std::invalid_argument("yun decomposition of zero");
    if (p.back() < 0) p = neg(std::move(p));
    if (degree(p) == 0) return factors;
    ZPoly dp = derivative(p);
    ZPoly g = gcd(p, dp);
    ZPoly w = exact_div(p, g);
    ZPoly y = exact_div(dp, g);
    while (degree(w) > 0) {
        ZPoly wp = derivative(w);
        ZPoly z(y);
        if (z.size() < wp.size()) z.resize(wp.size(), Integer(0));
        for (std::size_t i = 0; i < wp.size(); ++i) z[i] -= wp[i];
        normalize(z);
        ZPoly f = gcd(w, z);
        factors.push_back(f);
        w = exact_div(w, f);
        y = exact_div(z, f);
    }
    return factors;
}

ZPoly odd_multiplicity_part(const ZPoly& p) {
    auto factors = yun_decomposition(p);
    ZPoly out{Integer(1)};
    for (std::size_t m = 0; m < factors.size(); ++m) {
        if ((m + 1) % 2 == 1 && degree(factors[m]) > 0) out = mul(out, factors[m]);
    }
    normalize(out);
    return out;
}

std::vector<ZPoly> sturm_chain(const ZPoly& p_in) {
    std::vector<ZPoly> chain;
    ZPoly p = squarefree_part(p_in);
    if (is_zero(p)) throw std::invalid_argument("sturm chain of zero polynomial");
    chain.push_back(p);
    if (degree(p) == 0) return chain;
    chain.push_back(primitive_part(derivative(p)));
    while (degree(chain.back()) > 0) {
        const ZPoly& A = chain[chain.size() - 2];
        const ZPoly& B = chain.back();
        // R equal to rem(A, B) times a positive constant: eliminate with the
        // even multiplier lc(B)^2 so signs are never flipped.
        Integer lead = B.back();
        Integer lead2 = lead * lead;
        ZPoly r = A;
        while (!is_zero(r) && degree(r) >= degree(B)) {
            Integer top = r.back();
            std::size_t off = r.size() - B.size();
            for (auto& c : r) c *= lead2;
            Integer f = top * lead;
            for (std::size_t i = 0; i < B.size(); ++i) {
                r[off + i] -= f * B[i];
            }
            normalize(r);
        }
        if (is_zero(r)) break;  // square-free input: only at a constant tail
        r = primitive_part(r);
        chain.push_back(neg(std::move(r)));
    }
    return chain;
}

int chain_variations_at(const std::vector<ZPoly>& chain, const Rational& x) {
    int var = 0;
    int last = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

long sturm_count_halfopen(const std::vector<ZPoly>& chain, const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("bad interval");
    if (lo == hi) return 0;
    return chain_variations_at(chain, lo) - chain_variations_at(chain, hi);
}

Rational cauchy_root_bound(const ZPoly& p) {
    if (degree(p) < 1) return Rational(1);
    Integer maxc(0);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        Integer a = abs(p[i]);
        if (a > maxc) maxc = a;
    }
    Rational b = Rational(maxc) / Rational(abs(p.back()));
    return b + 1;
}

}  // namespace zp
}  // namespace soscert
