#include "vlab/kloosterman.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace vlab::arith {

std::int64_t mod_inverse(std::int64_t x, std::int64_t m) {
    if (m <= 0) throw std::domain_error("mod_inverse: modulus must be positive");
    if (m == 1) return 0;
    std::int64_t r0 = m, r1 = ((x % m) + m) % m;
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1)
        throw std::domain_error("mod_inverse: " + std::to_string(x) +
                                " is not invertible mod " + std::to_string(m));
    return ((t0 % m) + m) % m;
}

TwistParams make_twist(std::int64_t a, std::int64_t c, std::int64_t q) {
    if (c == 0) throw std::domain_error("make_twist: c must be nonzero");
    if (q <= 0) throw std::domain_error("make_twist: q must be positive");
    const std::int64_t cc = std::llabs(c);
    if (std::gcd(std::llabs(a), cc) != 1)
        throw std::domain_error("make_twist: gcd(a, c) must be 1");
    TwistParams t;
    t.a = a;
    t.c = c;
    t.a_bar = (cc == 1) ? 0 : mod_inverse(a, cc);
    t.q = q;
    return t;
}

double kloosterman(const KloostermanParams& p) {
    if (p.c == 0) throw std::domain_error("kloosterman: c must be nonzero");
    const std::int64_t c = std::llabs(p.c);
    std::complex<double> sum = 0.0;
    const double w = 2.0 * std::numbers::pi / double(c);
    for (std::int64_t x = 0; x < c; ++x) {
        if (std::gcd(x, c) != 1 && c != 1) continue;
        const std::int64_t xbar = mod_inverse(x, c);
        // reduce the exponent mod c before going to floating point
        const std::int64_t e = ((p.m % c) * x + (p.n % c) * xbar) % c;
        const double phase = w * double(((e % c) + c) % c);
        sum += std::complex<double>(std::cos(phase), std::sin(phase));
    }
    if (std::fabs(sum.imag()) > 1e-12 * std::max(1.0, std::fabs(sum.real())))
        throw std::runtime_error("kloosterman: imaginary part failed to cancel");
    return sum.real();
}

} // namespace vlab::arith
