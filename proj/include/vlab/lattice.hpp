#pragma once

// Lattice-point experiments: exact error terms for the circle and divisor
// problems, the smoothed two-dimensional summation identity, the three
// bounding terms of the smoothing argument, exponent fits, and the scan for
// large values of Delta(X) / X^{1/4}.

#include "vlab/report.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace vlab::lattice {

// Exact sum_{1 <= n <= X} r2(n) via column-wise integer counting (the
// origin excluded). Parallel over columns; the reduction is an integer sum.
std::int64_t circle_lattice_count(double X, unsigned threads = 1);

// Delta(X) = |sum_{n <= X} r2(n) - pi X|.
double delta_circle(double X, unsigned threads = 1);

// sum_{n <= X} d(n) by the hyperbola arrangement 2 sum_{k <= sqrt X}
// floor(X/k) - floor(sqrt X)^2.
std::int64_t divisor_sum(double X);

// D(X) = sum_{n <= X} d(n) - X log X - (2 gamma - 1) X.
double d_divisor(double X);

// Smooth radial cutoff of the disc of radius sqrt(X): the disc indicator
// mollified at scale delta = X^{-1/6} by a C-infinity bump of unit mass.
class SmoothedIndicator {
public:
    enum class Mollifier { BumpDefault, GaussianDegenerate };

    explicit SmoothedIndicator(double X, Mollifier kind = Mollifier::BumpDefault);

    double X() const { return X_; }
    double delta() const { return delta_; }
    Mollifier kind() const { return kind_; }

    // radial profile f_X: 1 inside sqrt(X) - delta, 0 beyond sqrt(X) + delta
    double profile(double r) const;
    double operator()(double vx, double vy) const;

    // radial profile of the mollifier's Fourier transform; psi(0) = 1
    static double psi(double rho);

private:
    double X_;
    double delta_;
    Mollifier kind_;
};

// Both sides of the smoothed identity
//   sum_{n>=0} r2(n) f_X(sqrt n)
//     = pi X + sqrt X sum_{n>=1} n^{-1/2} r2(n) psi(delta sqrt n)
//       J1(2 pi sqrt(n X)),
// or, in the degenerate Gaussian mode, plain two-dimensional summation of
// exp(-pi |v|^2 / X) against its transform.
engines::VerificationReport smoothed_circle_identity(
    double X, SmoothedIndicator::Mollifier kind, double tail_tol = 1e-9,
    unsigned threads = 1);

struct BoundTerms {
    double b1 = 0.0, b2 = 0.0, b3 = 0.0;
    double delta_x = 0.0;     // Delta(X) recomputed for the comparison
    bool inequality_ok = false;  // Delta(X) <= B1 + B2 + B3
};

// B1: annulus mass; B2/B3: the dual sum in absolute value split at
// n = delta^{-2}.
BoundTerms bound_terms(double X, unsigned threads = 1);

struct ErrorTermSeries {
    std::vector<std::pair<double, double>> samples;  // (X, error), X increasing
    double fitted_exponent = 0.0;
    double fit_lo = 0.0, fit_hi = 0.0;
};

// Least-squares slope of log(running max |error|) against log X. Requires
// at least 10 samples spanning two decades.
double exponent_fit(ErrorTermSeries& series);

ErrorTermSeries sweep_circle(double x_min, double x_max, double ratio = 1.15,
                             unsigned threads = 1);
ErrorTermSeries sweep_divisor(double x_min, double x_max, double ratio = 1.15);

struct HardyScanResult {
    double x_star = 0.0;
    double ratio_star = 0.0;
};

// Maximizes Delta(X) / X^{1/4} over integer jump points X <= x_max.
HardyScanResult hardy_scan(double x_max, unsigned threads = 1);

} // namespace vlab::lattice
