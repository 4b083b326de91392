#pragma once

// Kloosterman sums S(m, n; c) and the additive-twist parameter bookkeeping
// shared by the GL(2) and GL(3) summation engines.

#include <cstdint>

namespace vlab::arith {

struct KloostermanParams {
    std::int64_t m = 0;
    std::int64_t n = 0;
    std::int64_t c = 1;  // nonzero
};

// Twist data (a, c) with gcd(a, c) = 1 and the inverse a_bar of a mod |c|;
// q enters only on GL(3).
struct TwistParams {
    std::int64_t a = 0;
    std::int64_t c = 1;
    std::int64_t a_bar = 0;
    std::int64_t q = 1;
};

// Inverse of x modulo m > 0 in [0, m), by extended Euclid; throws
// std::domain_error when gcd(x, m) != 1. mod_inverse(x, 1) = 0.
std::int64_t mod_inverse(std::int64_t x, std::int64_t m);

// Validates gcd(a, c) = 1, c != 0, q > 0 and fills in a_bar.
TwistParams make_twist(std::int64_t a, std::int64_t c, std::int64_t q = 1);

// S(m, n; c) = sum over units x mod c of e((m x + n x_bar) / c). The
// imaginary part of the unit sum must vanish (checked to 1e-12) and is
// discarded.
double kloosterman(const KloostermanParams& p);

} // namespace vlab::arith
