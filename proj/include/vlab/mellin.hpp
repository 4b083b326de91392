#pragma once

// Mellin inversion, the Gamma-ratio kernels that convert between a test
// function's Mellin transform and the transform of its oscillatory pairings,
// and numerical verification of the Bessel-kernel Mellin identities.

#include "vlab/test_function.hpp"

#include <functional>

namespace vlab::mellin {

struct ContourSpec {
    double sigma = 1.0;
    double height = 40.0;
    int node_count = 1601;
    double pole_margin = 0.05;  // hard minimum distance to integrand poles
};

// (1/2 pi i) int_{Re s = sigma} Mf(s) |x|^{-s} ds by trapezoid on the
// vertical line. Throws std::runtime_error when the truncation-tail
// estimate exceeds tail_tol relative to the result.
double mellin_inverse(const std::function<Cplx(Cplx)>& Mf, double x,
                      const ContourSpec& contour, double tail_tol = 1e-9);

// Parity-0 kernel: pi^{1/2-s} Gamma(s/2) / Gamma((1-s)/2), the Mellin factor
// of the cosine pairing (equal to int_R cos(2 pi x)|x|^{s-1} dx on
// 0 < Re s < 1). Parity-1 kernel: the sign-weighted analogue
// kOddKernelUnit * pi^{1/2-s} Gamma((s+1)/2) / Gamma((2-s)/2).
// Poles at s = -2k (parity 0) and s = -(2k+1) (parity 1); returns 0 at the
// kernel's zeros s = 2k+1 / s = 2k+2.
Cplx gamma_ratio_kernel(Cplx s, int parity);

// The parity-1 normalization, frozen from a one-time calibration against
// fourier_kernel_quadrature (the calibration test stays in the suite).
inline constexpr Cplx kOddKernelUnit{0.0, -1.0};

// Pole location and residue of gamma_ratio_kernel(., parity): the k-th pole
// sits at -(2k + parity), k >= 0.
double gamma_ratio_pole(int parity, int k);
Cplx gamma_ratio_residue(int parity, int k);

// Direct oscillatory quadrature of int_R e^{-2 pi i x} (sgn x)^parity
// |x|^{s-1} dx on 0 < Re s < 1; the independent oracle for the kernels.
Cplx fourier_kernel_quadrature(Cplx s, int parity);

// F(y) = int_R f(x) cos(2 pi x y) dx for even f.
double cosine_transform(const TestFunction& f, double y);

// |MF(s) - kernel(s) Mf(1-s)| with F the cosine transform computed by
// quadrature.
double cosine_transform_check(const TestFunction& f, Cplx s);

enum class KernelKind { DivisorKernel, CircleKernel };

// Residual of the two Bessel-kernel Mellin identities on 0 < Re s < 3/4:
//   DivisorKernel: int_0^inf (4 K0(sqrt x) - 2 pi Y0(sqrt x)) x^{s-1} dx
//                  = 2^{4s} pi^{2s} kernel0(s)^2
//   CircleKernel:  int_0^inf J0(sqrt x) x^{s-1} dx = 4^s Gamma(s)/Gamma(1-s)
double bessel_kernel_mellin_check(Cplx s, KernelKind kind);

} // namespace vlab::mellin
