// Exact lattice counts. Delta(X) at X = 1e7 is a difference of nearly equal
// quantities of size ~3e7, so the counts are pure 64-bit integers with a
// rounding-free isqrt; only the final subtraction is floating point.

#include "vlab/lattice.hpp"

#include "vlab/coefficients.hpp"
#include "vlab/parallel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vlab::lattice {

std::int64_t circle_lattice_count(double X, unsigned threads) {
    if (X < 0.0) throw std::domain_error("circle_lattice_count: X >= 0");
    const auto XI = std::int64_t(std::floor(X));
    if (XI < 1) return 0;
    if (XI > std::int64_t(4e14))
        throw std::domain_error("circle_lattice_count: X beyond the configured budget");
    const std::int64_t R = arith::isqrt(XI);
    // columns x = 1..R, doubled; x = 0 column added separately
    const auto cols = parallel_map<std::int64_t>(
        std::size_t(R), threads, [&](std::size_t i) {
            const std::int64_t x = std::int64_t(i) + 1;
            return 2 * arith::isqrt(XI - x * x) + 1;
        });
    std::int64_t points = 2 * arith::isqrt(XI) + 1;  // x = 0
    for (std::int64_t c : cols) points += 2 * c;
    return points - 1;  // drop the origin
}

double delta_circle(double X, unsigned threads) {
    if (X < 1.0) throw std::domain_error("delta_circle: X >= 1");
    const auto count = circle_lattice_count(X, threads);
    return std::fabs(double(count) - std::numbers::pi * X);
}

std::int64_t divisor_sum(double X) {
    if (X < 1.0) throw std::domain_error("divisor_sum: X >= 1");
    const auto N = std::int64_t(std::floor(X));
    const std::int64_t K = arith::isqrt(N);
    std::int64_t acc = 0;
    for (std::int64_t k = 1; k <= K; ++k) acc += N / k;
    return 2 * acc - K * K;
}

double d_divisor(double X) {
    const auto sum = divisor_sum(X);
    return double(sum) - X * std::log(X) -
           (2.0 * std::numbers::egamma - 1.0) * X;
}

} // namespace vlab::lattice
