#include "vlab/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vlab::sf {

double theta(double t) {
    if (t <= 0.0) throw std::domain_error("theta: t must be > 0");
    long double sum = 1.0L;  // n = 0
    const long double pt = std::numbers::pi_v<long double> * (long double)t;
    for (long long n = 1;; ++n) {
        const long double term = std::exp(-pt * n * n);
        if (term < 1e-17L) break;
        sum += 2.0L * term;
    }
    return double(sum);
}

} // namespace vlab::sf
