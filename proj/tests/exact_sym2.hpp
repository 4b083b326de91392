#pragma once

// Exact integer-scaled arithmetic for the symmetric-square coefficient
// identities. Everything is scaled by n^11 so the checks run in (checked)
// 128-bit integers with no rounding at all.
//
//   lift side:   n^11 A_n = sum_{d^2 | n} tau((n/d^2)^2) d^22
//   Euler side:  n^11 A_n = prod_p U_{e_p}(p), where U_k = p^{11k} A_{p^k}
//     comes from the local factor (1 - a_p^2 x + ...) expansion: the cubic
//     denominator (1-x)(1 - (a_p^2 - 2) x + x^2) gives, with T = tau(p)^2
//     and P = p^11,
//       U_k = (T - P) U_{k-1} - P (T - P) U_{k-2} + P^3 U_{k-3}.

#include "vlab/checked_int.hpp"
#include "vlab/coefficients.hpp"

#include <map>

namespace exact_sym2 {

using vlab::checked_add;
using vlab::checked_mul;
using vlab::checked_pow;
using vlab::int128;

// n^11 A_n by the lift-side formula.
inline int128 lift_side(std::int64_t n, const vlab::arith::TauHecke& tau) {
    int128 acc = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % (d * d) != 0) continue;
        const std::int64_t q = n / (d * d);
        acc = checked_add(acc, checked_mul(tau.tau(q * q), checked_pow(d, 22)));
    }
    return acc;
}

// U_k(p) = p^{11k} A_{p^k} by the local Euler-factor recursion.
inline int128 local_scaled(std::int64_t p, int k, const vlab::arith::TauHecke& tau) {
    const int128 P = checked_pow(p, 11);
    const int128 T = checked_mul(tau.tau(p), tau.tau(p));
    int128 u0 = 1, u1 = 0, u2 = 0;  // U_{k}, U_{k-1}, U_{k-2}
    for (int j = 1; j <= k; ++j) {
        const int128 next = checked_add(
            checked_add(checked_mul(T - P, u0), -checked_mul(P, checked_mul(T - P, u1))),
            checked_mul(checked_mul(P, checked_mul(P, P)), u2));
        u2 = u1;
        u1 = u0;
        u0 = next;
    }
    return u0;
}

// n^11 A_n by multiplying the local factors.
inline int128 euler_side(std::int64_t n, const vlab::arith::TauHecke& tau) {
    int128 acc = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        acc = checked_mul(acc, local_scaled(p, e, tau));
    }
    if (n > 1) acc = checked_mul(acc, local_scaled(n, 1, tau));
    return acc;
}

} // namespace exact_sym2
