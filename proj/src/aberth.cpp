#include "soscert/aberth.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "soscert/intpoly.hpp"

namespace soscert {

namespace {

// Minimal complex arithmetic over raw mpfr_t, kept local to this file.
struct CVec {
    std::vector<mpfr_t> re, im;
    mpfr_prec_t prec;

    CVec(std::size_t n, mpfr_prec_t p) : re(n), im(n), prec(p) {
        for (std::size_t i = 0; i < n; ++i) {
            mpfr_init2(re[i], prec);
            mpfr_init2(im[i], prec);
            mpfr_set_zero(re[i], 1);
            mpfr_set_zero(im[i], 1);
        }
    }
    ~CVec() {
        for (std::size_t i = 0; i < re.size(); ++i) {
            mpfr_clear(re[i]);
            mpfr_clear(im[i]);
        }
    }
    CVec(const CVec&) = delete;
    CVec& operator=(const CVec&) = delete;
    std::size_t size() const { return re.size(); }
};

struct Scratch {
    mpfr_t a, b, c, d, t1, t2, t3, t4;
    explicit Scratch(mpfr_prec_t prec) {
        for (mpfr_t* p : {&a, &b, &c, &d, &t1, &t2, &t3, &t4}) mpfr_init2(*p, prec);
    }
    ~Scratch() {
        for (mpfr_t* p : {&a, &b, &c, &d, &t1, &t2, &t3, &t4}) mpfr_clear(*p);
    }
};

// (xr, xi) *= (yr, yi)
void cmul(mpfr_t xr, mpfr_t xi, const mpfr_t yr, const mpfr_t yi, Scratch& s) {
    mpfr_mul(s.t1, xr, yr, MPFR_RNDN);
    mpfr_mul(s.t2, xi, yi, MPFR_RNDN);
    mpfr_mul(s.t3, xr, yi, MPFR_RNDN);
    mpfr_mul(s.t4, xi, yr, MPFR_RNDN);
    mpfr_sub(xr, s.t1, s.t2, MPFR_RNDN);
    mpfr_add(xi, s.t3, s.t4, MPFR_RNDN);
}

// (qr, qi) = (ar, ai) / (br, bi)
void cdiv(mpfr_t qr, mpfr_t qi, const mpfr_t ar, const mpfr_t ai, const mpfr_t br, const mpfr_t bi, Scratch& s) {
    mpfr_mul(s.t1, br, br, MPFR_RNDN);
    mpfr_mul(s.t2, bi, bi, MPFR_RNDN);
    mpfr_add(s.t1, s.t1, s.t2, MPFR_RNDN);  // |b|^2
    mpfr_mul(s.t2, ar, br, MPFR_RNDN);
    mpfr_mul(s.t3, ai, bi, MPFR_RNDN);
    mpfr_add(s.t2, s.t2, s.t3, MPFR_RNDN);  // ar br + ai bi
    mpfr_mul(s.t3, ai, br, MPFR_RNDN);
    mpfr_mul(s.t4, ar, bi, MPFR_RNDN);
    mpfr_sub(s.t3, s.t3, s.t4, MPFR_RNDN);  // ai br - ar bi
    mpfr_div(qr, s.t2, s.t1, MPFR_RNDN);
    mpfr_div(qi, s.t3, s.t1, MPFR_RNDN);
}

Rational mpfr_to_rational(const mpfr_t x) {
    if (mpfr_zero_p(x)) return Rational(0);
    mpz_t m;
    mpz_init(m);
    mpfr_exp_t e = mpfr_get_z_2exp(m, x);
    Integer mant(m);
    mpz_clear(m);
    Rational r(mant);
    if (e >= 0) {
        mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
    } else {
        mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(-e));
        r.canonicalize();
    }
    return r;
}

}  // namespace

std::vector<ComplexRootEstimate> find_complex_roots(const UniPoly& p, unsigned precision_bits) {
    if (p.is_zero()) throw std::invalid_argument("root finding on the zero polynomial");
    ZPoly z = zp::from_unipoly(p);
    const long d = zp::degree(z);
    std::vector<ComplexRootEstimate> out;
    if (d < 1) return out;

    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits + 96);
    // Real coefficients at working precision.
    std::vector<mpfr_t> coef(static_cast<std::size_t>(d) + 1);
    for (std::size_t i = 0; i < coef.size(); ++i) {
        mpfr_init2(coef[i], prec);
        mpfr_set_z(coef[i], z[i].get_mpz_t(), MPFR_RNDN);
    }

    CVec zs(static_cast<std::size_t>(d), prec);
    Scratch s(prec);

    // Initial guesses on a circle inside the Cauchy bound.
    Rational bound = zp::cauchy_root_bound(z);
    double radius = 0.5 * bound.get_d();
    if (!(radius > 0) || !std::isfinite(radius)) radius = 1.0;
    if (radius > 1e12) radius = 1e12;
    for (long i = 0; i < d; ++i) {
        double theta = 2.0 * 3.14159265358979323846 * static_cast<double>(i) / static_cast<double>(d) + 0.4;
        mpfr_set_d(zs.re[static_cast<std::size_t>(i)], radius * std::cos(theta), MPFR_RNDN);
        mpfr_set_d(zs.im[static_cast<std::size_t>(i)], radius * std::sin(theta) + 0.17, MPFR_RNDN);
    }

    mpfr_t pr, pi, dr, di, wr, wi, sr, si, er, ei, nr, ni, tol, delta, mag;
    for (mpfr_t* t : {&pr, &pi, &dr, &di, &wr, &wi, &sr, &si, &er, &ei, &nr, &ni, &tol, &delta, &mag}) {
        mpfr_init2(*t, prec);
    }
    mpfr_set_ui(tol, 1, MPFR_RNDN);
    mpfr_div_2ui(tol, tol, precision_bits + 24, MPFR_RNDN);

    const int max_sweeps = 600;
    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        mpfr_set_zero(delta, 1);
        for (long i = 0; i < d; ++i) {
            auto ii = static_cast<std::size_t>(i);
            // Horner for p(z_i) and p'(z_i).
            mpfr_set(pr, coef[static_cast<std::size_t>(d)], MPFR_RNDN);
            mpfr_set_zero(pi, 1);
            mpfr_set_zero(dr, 1);
            mpfr_set_zero(di, 1);
            for (long j = d - 1; j >= 0; --j) {
                cmul(dr, di, zs.re[ii], zs.im[ii], s);
                mpfr_add(dr, dr, pr, MPFR_RNDN);
                mpfr_add(di, di, pi, MPFR_RNDN);
                cmul(pr, pi, zs.re[ii], zs.im[ii], s);
                mpfr_add(pr, pr, coef[static_cast<std::size_t>(j)], MPFR_RNDN);
            }
            if (mpfr_zero_p(pr) && mpfr_zero_p(pi)) continue;  // already a root
            if (mpfr_zero_p(dr) && mpfr_zero_p(di)) {
                // Derivative vanished: nudge and move on.
                mpfr_add_d(zs.re[ii], zs.re[ii], 1e-3, MPFR_RNDN);
                continue;
            }
            // Newton step w = p/p'.
            cdiv(wr, wi, pr, pi, dr, di, s);
            // Aberth correction sum.
            mpfr_set_zero(sr, 1);
            mpfr_set_zero(si, 1);
            for (long j = 0; j < d; ++j) {
                if (j == i) continue;
                auto jj = static_cast<std::size_t>(j);
                mpfr_sub(er, zs.re[ii], zs.re[jj], MPFR_RNDN);
                mpfr_sub(ei, zs.im[ii], zs.im[jj], MPFR_RNDN);
                if (mpfr_zero_p(er) && mpfr_zero_p(ei)) {
                    mpfr_set_d(er, 1e-20, MPFR_RNDN);
                }
                mpfr_set_ui(nr, 1, MPFR_RNDN);
                mpfr_set_zero(ni, 1);
                cdiv(nr, ni, nr, ni, er, ei, s);
                mpfr_add(sr, sr, nr, MPFR_RNDN);
                mpfr_add(si, si, ni, MPFR_RNDN);
            }
            // denom = 1 - w * S
            mpfr_set(nr, wr, MPFR_RNDN);
            mpfr_set(ni, wi, MPFR_RNDN);
            cmul(nr, ni, sr, si, s);
            mpfr_ui_sub(nr, 1, nr, MPFR_RNDN);
            mpfr_neg(ni, ni, MPFR_RNDN);
            if (mpfr_zero_p(nr) && mpfr_zero_p(ni)) {
                mpfr_set_d(nr, 1.0, MPFR_RNDN);
            }
            cdiv(er, ei, wr, wi, nr, ni, s);  // correction
            mpfr_sub(zs.re[ii], zs.re[ii], er, MPFR_RNDN);
            mpfr_sub(zs.im[ii], zs.im[ii], ei, MPFR_RNDN);
            // track max relative step
            mpfr_hypot(mag, er, ei, MPFR_RNDN);
            mpfr_hypot(er, zs.re[ii], zs.im[ii], MPFR_RNDN);
            mpfr_add_ui(er, er, 1, MPFR_RNDN);
            mpfr_div(mag, mag, er, MPFR_RNDN);
            if (mpfr_cmp(mag, delta) > 0) mpfr_set(delta, mag, MPFR_RNDN);
        }
        if (mpfr_cmp(delta, tol) < 0) converged = true;
    }

    for (std::size_t i = 0; i < coef.size(); ++i) mpfr_clear(coef[i]);
    if (!converged) {
        for (mpfr_t* t : {&pr, &pi, &dr, &di, &wr, &wi, &sr, &si, &er, &ei, &nr, &ni, &tol, &delta, &mag}) {
            mpfr_clear(*t);
        }
        throw std::runtime_error("aberth iteration did not settle; retry with more precision");
    }

    out.reserve(static_cast<std::size_t>(d));
    for (long i = 0; i < d; ++i) {
        auto ii = static_cast<std::size_t>(i);
        out.push_back(ComplexRootEstimate{mpfr_to_rational(zs.re[ii]), mpfr_to_rational(zs.im[ii])});
    }
    for (mpfr_t* t : {&pr, &pi, &dr, &di, &wr, &wi, &sr, &si, &er, &ei, &nr, &ni, &tol, &delta, &mag}) {
        mpfr_clear(*t);
    }
    return out;
}

}  // namespace soscert
