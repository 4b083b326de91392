#pragma once

// Self-contained special functions: complex log-gamma, archimedean gamma
// factors, Bessel J0/J1/Y0/K0 plus K of complex order, Riemann zeta and xi,
// the Dirichlet L-function for the nontrivial character mod 4, and the theta
// function. Everything is deterministic and reentrant; no global state.

#include <complex>

namespace vlab::sf {

using Cplx = std::complex<double>;

struct SpecialFnConfig {
    double target_abs_tol = 1e-13;
    // Series below, Hankel-type asymptotic expansion above, per function.
    // For the oscillatory kinds the asymptotic truncation floor at 12 is
    // ~8e-13, too close to the 1e-12 target, so they switch at 16 (both
    // branches stay cross-validated on [8,16]). K0 has no oscillation and
    // its series cancels ~e^{2x} digits, so it switches earlier.
    double bessel_switch_oscillatory = 16.0;
    double bessel_switch_k0 = 12.0;
    double kbessel_rel_tol = 1e-11;
};

inline const SpecialFnConfig& default_special_config() {
    static const SpecialFnConfig cfg{};
    return cfg;
}

// Principal-branch log Gamma; throws std::domain_error at the poles
// (nonpositive integers).
Cplx log_gamma(Cplx s);

enum class GammaKind { R, C };

// Gamma_R(s) = pi^(-s/2) Gamma(s/2), Gamma_C(s) = 2 (2 pi)^(-s) Gamma(s).
Cplx gamma_archimedean(Cplx s, GammaKind kind);

enum class BesselKind { J0, J1, Y0, K0 };

double bessel(BesselKind kind, double x,
              const SpecialFnConfig& cfg = default_special_config());

namespace detail {
// Exposed so the overlap zone of the two branches can be tested directly.
double bessel_series(BesselKind kind, double x);
double bessel_asymptotic(BesselKind kind, double x);
} // namespace detail

// K_s(x) for complex order s via the integral representation
// K_s(x) = int_0^inf exp(-x cosh t) cosh(s t) dt (trapezoid with step
// halving; throws std::runtime_error if the refinement fails to settle).
// Escalates to extended working precision for |Im s| > 10, where the
// oscillatory cancellation exceeds what long double can absorb.
Cplx bessel_K_complex_order(Cplx s, double x,
                            const SpecialFnConfig& cfg = default_special_config());

// Fixed-precision variant for Mellin-Barnes contour nodes: accurate in the
// absolute sense (roundoff floor of the integrand peak) rather than the
// relative sense, which is what a balanced contour integral needs.
Cplx kbessel_contour_node(Cplx s, double x);

// Euler-Maclaurin zeta, intended for |Im s| <= 100, -5 <= Re s <= 5.
Cplx zeta(Cplx s);

// xi(s) = pi^(-s/2) Gamma(s/2) zeta(s); simple poles at s = 0, 1.
Cplx xi(Cplx s);

// L(s, chi_4) = sum_{k>=0} (-1)^k (2k+1)^(-s), entire; evaluated by
// alternating-series acceleration.
Cplx dirichlet_L_chi4(Cplx s);

// theta(t) = sum_{n in Z} exp(-pi n^2 t), t > 0.
double theta(double t);

} // namespace vlab::sf
