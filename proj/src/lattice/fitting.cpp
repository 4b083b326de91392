// Exponent fits on running maxima and the scan for large circle-problem
// error values.

#include "vlab/lattice.hpp"

#include "vlab/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace vlab::lattice {

double exponent_fit(ErrorTermSeries& series) {
    const auto& s = series.samples;
    if (s.size() < 10)
        throw std::domain_error("exponent_fit: need at least 10 samples");
    if (s.front().first <= 0.0 || s.back().first / s.front().first < 99.0)
        throw std::domain_error("exponent_fit: samples must span two decades");
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i].first <= s[i - 1].first)
            throw std::domain_error("exponent_fit: X must increase strictly");

    // least squares of log(running max |error|) on log X
    double run = 0.0;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t n = 0;
    for (const auto& [x, err] : s) {
        run = std::max(run, std::fabs(err));
        if (run <= 0.0) continue;  // leading zeros carry no information
        const double lx = std::log(x), ly = std::log(run);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 10) throw std::domain_error("exponent_fit: degenerate error values");
    const double denom = double(n) * sxx - sx * sx;
    if (std::fabs(denom) < 1e-12)
        throw std::domain_error("exponent_fit: degenerate spread");
    series.fitted_exponent = (double(n) * sxy - sx * sy) / denom;
    series.fit_lo = s.front().first;
    series.fit_hi = s.back().first;
    return series.fitted_exponent;
}

namespace {

ErrorTermSeries sweep(double x_min, double x_max, double ratio,
                      double (*error_fn)(double, unsigned), unsigned threads) {
    if (!(1.0 <= x_min && x_min < x_max) || ratio <= 1.0)
        throw std::domain_error("sweep: bad range");
    ErrorTermSeries out;
    for (double x = x_min; x <= x_max * (1.0 + 1e-12); x *= ratio)
        out.samples.emplace_back(std::floor(x), 0.0);
    out.samples.emplace_back(std::floor(x_max), 0.0);
    // dedupe after flooring
    out.samples.erase(std::unique(out.samples.begin(), out.samples.end(),
                                  [](auto& a, auto& b) { return a.first == b.first; }),
                      out.samples.end());
    for (auto& [x, e] : out.samples) e = error_fn(x, threads);
    return out;
}

} // namespace

ErrorTermSeries sweep_circle(double x_min, double x_max, double ratio,
                             unsigned threads) {
    return sweep(x_min, x_max, ratio,
                 [](double x, unsigned th) { return delta_circle(x, th); }, threads);
}

ErrorTermSeries sweep_divisor(double x_min, double x_max, double ratio) {
    return sweep(x_min, x_max, ratio,
                 [](double x, unsigned) { return d_divisor(x); }, 1);
}

HardyScanResult hardy_scan(double x_max, unsigned threads) {
    (void)threads;  // the incremental scan is a single prefix pass
    if (x_max < 1000.0) throw std::domain_error("hardy_scan: x_max >= 1e3");
    const auto N = std::int64_t(std::floor(x_max));
    if (N > std::int64_t(2e7))
        throw std::domain_error("hardy_scan: budget exhausted (x_max too large)");

    // r2 prefix sums give Delta at every integer jump point
    const auto r2 = arith::r2_table(N);
    HardyScanResult best;
    std::int64_t prefix = 0;
    for (std::int64_t n = 1; n <= N; ++n) {
        prefix += std::int64_t(r2.exact(n));
        const double delta = std::fabs(double(prefix) - std::numbers::pi * double(n));
        const double ratio = delta / std::pow(double(n), 0.25);
        if (ratio > best.ratio_star) {
            best.ratio_star = ratio;
            best.x_star = double(n);
        }
    }
    return best;
}

} // namespace vlab::lattice
