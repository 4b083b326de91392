// Bessel functions J0, J1, Y0, K0 for positive real argument, and K of
// complex order through its integral representation.
//
// Real-order strategy: ascending power series below the configured switch
// point, Hankel asymptotic expansion above it, both evaluated in long double
// so the cancellation in the series (worst near the switch) stays well under
// the 1e-12 absolute target. The asymptotic sums are truncated at their
// smallest term.

#include "vlab/special.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vlab::sf {

namespace {

using ld = long double;
constexpr ld kPiL = std::numbers::pi_v<ld>;
constexpr ld kEulerL = std::numbers::egamma_v<ld>;

ld j0_series(ld x) {
    const ld q = x * x / 4.0L;
    ld term = 1.0L, sum = 1.0L;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (ld(k) * ld(k));
        sum += term;
        if (std::fabs(term) < 1e-22L * std::fabs(sum) + 1e-40L) break;
    }
    return sum;
}

ld j1_series(ld x) {
    const ld q = x * x / 4.0L;
    ld term = 1.0L, sum = 1.0L;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (ld(k) * ld(k + 1));
        sum += term;
        if (std::fabs(term) < 1e-22L * std::fabs(sum) + 1e-40L) break;
    }
    return (x / 2.0L) * sum;
}

ld y0_series(ld x) {
    // (2/pi) [ (log(x/2) + gamma) J0(x) + sum_{k>=1} (-1)^{k+1} H_k q^k / (k!)^2 ]
    const ld q = x * x / 4.0L;
    ld term = 1.0L, hk = 0.0L, sum = 0.0L;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (ld(k) * ld(k));
        hk += 1.0L / ld(k);
        const ld add = -term * hk;  // (-1)^{k+1} H_k q^k/(k!)^2
        sum += add;
        if (std::fabs(add) < 1e-22L * (std::fabs(sum) + 1.0L)) break;
    }
    return (2.0L / kPiL) * ((std::log(x / 2.0L) + kEulerL) * j0_series(x) + sum);
}

ld k0_series(ld x) {
    // -(log(x/2) + gamma) I0(x) + sum_{k>=1} H_k q^k / (k!)^2, all terms positive.
    const ld q = x * x / 4.0L;
    ld term = 1.0L, i0 = 1.0L, hk = 0.0L, sum = 0.0L;
    for (int k = 1; k < 200; ++k) {
        term *= q / (ld(k) * ld(k));
        i0 += term;
        hk += 1.0L / ld(k);
        sum += term * hk;
        if (term < 1e-22L * i0) break;
    }
    return -(std::log(x / 2.0L) + kEulerL) * i0 + sum;
}

// Hankel coefficients a_k(0): a_0 = 1, a_k = a_{k-1} (-(2k-1)^2) / (8k).
// P = sum_k a_{2k} (-1)^k x^{-2k} (signs folded in below),
// Q = sum_k a_{2k+1} (-1)^k x^{-2k-1}.
void hankel_pq(ld nu, ld x, ld* P, ld* Q) {
    const ld fournu2 = 4.0L * nu * nu;
    ld ak = 1.0L, xk = 1.0L, p = 1.0L, q = 0.0L, last = 1.0L;
    for (int k = 1; k < 80; ++k) {
        ak *= (fournu2 - ld(2 * k - 1) * ld(2 * k - 1)) / (8.0L * ld(k));
        xk *= x;
        const ld term = ak / xk;
        if (std::fabs(term) > last) break;  // smallest-term truncation
        last = std::fabs(term);
        const int r = k % 4;  // i^k pattern: P gets even k, Q odd k
        if (r == 0) p += term;
        else if (r == 1) q += term;
        else if (r == 2) p -= term;
        else q -= term;
        if (last < 1e-22L) break;
    }
    *P = p;
    *Q = q;
}

ld j0_asymptotic(ld x) {
    ld P, Q;
    hankel_pq(0.0L, x, &P, &Q);
    const ld chi = x - kPiL / 4.0L;
    return std::sqrt(2.0L / (kPiL * x)) * (P * std::cos(chi) - Q * std::sin(chi));
}

ld y0_asymptotic(ld x) {
    ld P, Q;
    hankel_pq(0.0L, x, &P, &Q);
    const ld chi = x - kPiL / 4.0L;
    return std::sqrt(2.0L / (kPiL * x)) * (P * std::sin(chi) + Q * std::cos(chi));
}

ld j1_asymptotic(ld x) {
    ld P, Q;
    hankel_pq(1.0L, x, &P, &Q);
    const ld chi = x - 3.0L * kPiL / 4.0L;
    return std::sqrt(2.0L / (kPiL * x)) * (P * std::cos(chi) - Q * std::sin(chi));
}

ld k0_asymptotic(ld x) {
    // K0(x) ~ sqrt(pi/(2x)) e^{-x} sum_k a_k(0) / x^k
    ld ak = 1.0L, xk = 1.0L, sum = 1.0L, last = 1.0L;
    for (int k = 1; k < 80; ++k) {
        ak *= (-(ld(2 * k - 1) * ld(2 * k - 1))) / (8.0L * ld(k));
        xk *= x;
        const ld term = ak / xk;
        if (std::fabs(term) > last) break;
        last = std::fabs(term);
        sum += term;
        if (last < 1e-22L) break;
    }
    if (x > 11000.0L) return 0.0L;  // e^{-x} underflows even in long double
    return std::sqrt(kPiL / (2.0L * x)) * std::exp(-x) * sum;
}

} // namespace

namespace detail {

double bessel_series(BesselKind kind, double x) {
    switch (kind) {
        case BesselKind::J0: return double(j0_series(x));
        case BesselKind::J1: return double(j1_series(x));
        case BesselKind::Y0: return double(y0_series(x));
        case BesselKind::K0: return double(k0_series(x));
    }
    throw std::logic_error("bessel_series: bad kind");
}

double bessel_asymptotic(BesselKind kind, double x) {
    switch (kind) {
        case BesselKind::J0: return double(j0_asymptotic(x));
        case BesselKind::J1: return double(j1_asymptotic(x));
        case BesselKind::Y0: return double(y0_asymptotic(x));
        case BesselKind::K0: return double(k0_asymptotic(x));
    }
    throw std::logic_error("bessel_asymptotic: bad kind");
}

} // namespace detail

double bessel(BesselKind kind, double x, const SpecialFnConfig& cfg) {
    if (kind == BesselKind::Y0 || kind == BesselKind::K0) {
        if (x <= 0.0) throw std::domain_error("bessel: Y0/K0 require x > 0");
    } else if (x < 0.0) {
        throw std::domain_error("bessel: negative argument");
    }
    const double cut = kind == BesselKind::K0 ? cfg.bessel_switch_k0
                                              : cfg.bessel_switch_oscillatory;
    if (x < cut) return detail::bessel_series(kind, x);
    return detail::bessel_asymptotic(kind, x);
}

namespace {

// Fast branch of the K integral: long double trapezoid with step halving.
// The integrand exp(-x cosh t) cosh(s t) oscillates with frequency Im s and
// the value is smaller than the peak integrand by about exp(-pi |Im s| / 2),
// so the relative accuracy of this branch degrades beyond |Im s| ~ 10.
Cplx kbessel_trapezoid(Cplx s, double x, double rel_tol, bool allow_roundoff_floor) {
    using CL = std::complex<long double>;
    const CL sl(s.real(), s.imag());
    const ld xl = x;
    const ld abs_re = std::fabs(sl.real());

    auto exponent_bound = [&](ld t) { return -xl * std::cosh(t) + abs_re * t; };

    // Integrand magnitude is bounded by exp(-x cosh t + |Re s| t); cut the
    // range where that drops 60 e-folds below its maximum.
    ld peak = exponent_bound(0.0L);
    if (abs_re > xl) peak = std::max(peak, exponent_bound(std::asinh(abs_re / xl)));
    ld tmax = 1.0L;
    while (exponent_bound(tmax) - peak > -60.0L && tmax < 60.0L) tmax += 0.5L;

    // Cancellation leaves the result no more accurate than the roundoff of
    // the largest terms; contour-node callers accept that floor.
    const ld floor = allow_roundoff_floor ? 1e-16L * std::exp(peak) : 1e-320L;

    auto trapezoid = [&](ld h) {
        CL sum = 0.5L * std::exp(-xl);  // t = 0 endpoint: cosh(0) = 1
        for (ld t = h; t <= tmax; t += h)
            sum += std::exp(-xl * std::cosh(t)) * std::cosh(sl * t);
        return CL(sum * h);
    };

    ld h = 0.25L;
    CL prev = trapezoid(h);
    for (int iter = 0; iter < 14; ++iter) {
        h /= 2.0L;
        const CL cur = trapezoid(h);
        const ld err = std::abs(cur - prev);
        if (err < ld(rel_tol) * std::abs(cur) + floor)
            return Cplx(double(cur.real()), double(cur.imag()));
        prev = cur;
    }
    throw std::runtime_error("bessel_K_complex_order: quadrature did not converge");
}

// High-|Im s| branch: same trapezoid, carried out in MPFR with working
// precision scaled to the expected cancellation (~ pi |Im s| / 2 e-folds).
// cosh(s t) is expanded as cosh(a t)cos(b t) + i sinh(a t)sin(b t).
Cplx kbessel_mpfr(Cplx s, double x, double rel_tol) {
    const double a = s.real(), b = std::fabs(s.imag());
    const double cancel_bits = (std::numbers::pi / 2.0) * b / std::numbers::ln2;
    const mpfr_prec_t prec = mpfr_prec_t(96 + cancel_bits);

    // Range cutoff: stop once the magnitude bound sits well below the
    // cancellation floor times the requested tolerance.
    const double abs_a = std::fabs(a);
    const double drop = std::numbers::pi / 2.0 * b - std::log(rel_tol) + 20.0;
    double tmax = 1.0;
    while (-x * std::cosh(tmax) + abs_a * tmax > -x - drop && tmax < 80.0) tmax += 0.5;

    // Step from the strip estimate |error| ~ exp(|Im s| d - 2 pi d / h), d = 1.
    const double h0 = std::min(0.05, 2.0 * std::numbers::pi / (2.6 * b + 40.0));

    mpfr_t t, w, mag, ca, sa, cb, sb, re, im, tmp;
    mpfr_inits2(prec, t, w, mag, ca, sa, cb, sb, re, im, tmp, (mpfr_ptr) nullptr);

    auto sum_with_step = [&](double h, double* out_re, double* out_im) {
        mpfr_set_d(re, 0.0, MPFR_RNDN);
        mpfr_set_d(im, 0.0, MPFR_RNDN);
        const long n = long(tmax / h) + 1;
        for (long k = n; k >= 0; --k) {  // small terms first
            mpfr_set_d(t, h, MPFR_RNDN);
            mpfr_mul_si(t, t, k, MPFR_RNDN);
            mpfr_cosh(w, t, MPFR_RNDN);
            mpfr_mul_d(w, w, -x, MPFR_RNDN);
            mpfr_exp(mag, w, MPFR_RNDN);  // exp(-x cosh t)
            if (k == 0) mpfr_div_ui(mag, mag, 2, MPFR_RNDN);
            mpfr_mul_d(w, t, a, MPFR_RNDN);
            mpfr_cosh(ca, w, MPFR_RNDN);
            mpfr_sinh(sa, w, MPFR_RNDN);
            mpfr_mul_d(w, t, b, MPFR_RNDN);
            mpfr_cos(cb, w, MPFR_RNDN);
            mpfr_sin(sb, w, MPFR_RNDN);
            mpfr_mul(tmp, ca, cb, MPFR_RNDN);
            mpfr_mul(tmp, tmp, mag, MPFR_RNDN);
            mpfr_add(re, re, tmp, MPFR_RNDN);
            mpfr_mul(tmp, sa, sb, MPFR_RNDN);
            mpfr_mul(tmp, tmp, mag, MPFR_RNDN);
            mpfr_add(im, im, tmp, MPFR_RNDN);
        }
        mpfr_mul_d(tmp, re, h, MPFR_RNDN);
        *out_re = mpfr_get_d(tmp, MPFR_RNDN);
        mpfr_mul_d(tmp, im, h, MPFR_RNDN);
        *out_im = mpfr_get_d(tmp, MPFR_RNDN);
    };

    double r1, i1, r2, i2;
    sum_with_step(h0, &r1, &i1);
    sum_with_step(h0 / 2.0, &r2, &i2);
    mpfr_clears(t, w, mag, ca, sa, cb, sb, re, im, tmp, (mpfr_ptr) nullptr);

    const Cplx fine(r2, s.imag() < 0.0 ? -i2 : i2);
    const Cplx coarse(r1, s.imag() < 0.0 ? -i1 : i1);
    if (std::abs(fine - coarse) > rel_tol * std::abs(fine) + 1e-300)
        throw std::runtime_error("bessel_K_complex_order: quadrature did not converge");
    return fine;
}

} // namespace

Cplx bessel_K_complex_order(Cplx s, double x, const SpecialFnConfig& cfg) {
    if (x <= 0.0) throw std::domain_error("bessel_K_complex_order: x must be > 0");
    if (std::abs(s.imag()) > 400.0)
        throw std::domain_error("bessel_K_complex_order: order too far up the line");
    if (std::abs(s.imag()) <= 10.0)
        return kbessel_trapezoid(s, x, cfg.kbessel_rel_tol, false);
    return kbessel_mpfr(s, x, cfg.kbessel_rel_tol);
}

// Absolute-accuracy variant used on Mellin-Barnes contour nodes: identical to
// the fast branch but never escalates precision. Its absolute error is at the
// long double roundoff floor of the integrand peak, which is all a balanced
// contour needs; values that have decayed below that floor do not matter.
Cplx kbessel_contour_node(Cplx s, double x) {
    return kbessel_trapezoid(s, x, 1e-11, true);
}

} // namespace vlab::sf
