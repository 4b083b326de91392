// Riemann zeta by Euler-Maclaurin, the completed xi function, and
// L(s, chi_4) by accelerated alternating summation.

#include "vlab/special.hpp"

#include <cmath>
#include <stdexcept>

namespace vlab::sf {

namespace {

using ld = long double;
using CL = std::complex<ld>;

// B_{2k} / (2k)! for k = 1..8.
constexpr long double kEmCoeff[] = {
    8.3333333333333333333e-02L,   //  1/12
    -1.3888888888888888889e-03L,  // -1/720
    3.3068783068783068783e-05L,   //  1/30240
    -8.2671957671957671958e-07L,  // -1/1209600
    2.0876756987868098979e-08L,   //  1/47900160
    -5.2841901386874931848e-10L,
    1.3382536530684678833e-11L,
    -3.3896802963225828668e-13L,
};

CL cpow(long double base, CL expo) {
    return std::exp(expo * std::log(base));
}

} // namespace

namespace {

Cplx zeta_euler_maclaurin(Cplx s);

// chi(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s), the reflection factor in
// zeta(s) = chi(s) zeta(1-s). Keeps the left half plane well conditioned
// (direct Euler-Maclaurin loses all relative accuracy near trivial zeros).
Cplx zeta_reflection(Cplx s) {
    const Cplx chi = std::exp(s * std::numbers::ln2 +
                              (s - 1.0) * std::log(std::numbers::pi) +
                              log_gamma(1.0 - s)) *
                     std::sin(std::numbers::pi * s / 2.0);
    return chi * zeta_euler_maclaurin(1.0 - s);
}

} // namespace

Cplx zeta(Cplx s) {
    if (std::abs(s - Cplx(1.0, 0.0)) < 1e-13)
        throw std::domain_error("zeta: pole at s = 1");
    if (s.real() < -0.5) return zeta_reflection(s);
    return zeta_euler_maclaurin(s);
}

namespace {

Cplx zeta_euler_maclaurin(Cplx s) {
    const CL sl(s.real(), s.imag());
    const int N = 30 + 2 * int(std::ceil(std::abs(s.imag())));

    CL sum = 0.0L;
    for (int n = 1; n < N; ++n) sum += cpow(n, -sl);
    const long double Nl = N;
    sum += cpow(Nl, 1.0L - sl) / (sl - 1.0L);
    sum += 0.5L * cpow(Nl, -sl);

    // Correction terms B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}.
    CL rising = sl;                  // (s)_{2k-1}, updated incrementally
    CL npow = cpow(Nl, -sl - 1.0L);  // N^{-s-2k+1}
    const long double ninv2 = 1.0L / (Nl * Nl);
    for (int k = 1; k <= 8; ++k) {
        sum += kEmCoeff[k - 1] * rising * npow;
        rising *= (sl + ld(2 * k - 1)) * (sl + ld(2 * k));
        npow *= ninv2;
    }
    return Cplx(double(sum.real()), double(sum.imag()));
}

} // namespace

Cplx xi(Cplx s) {
    if (std::abs(s) < 1e-13 || std::abs(s - Cplx(1.0, 0.0)) < 1e-13)
        throw std::domain_error("xi: simple pole at s = 0 or s = 1");
    return gamma_archimedean(s, GammaKind::R) * zeta(s);
}

Cplx dirichlet_L_chi4(Cplx s) {
    // Cohen-Rodriguez Villegas-Zagier acceleration of the alternating series
    // sum_{k>=0} (-1)^k (2k+1)^{-s}.
    const CL sl(s.real(), s.imag());
    const int n = 60 + int(2.0 * std::abs(s.imag()));
    const long double dn = std::pow(3.0L + std::sqrt(8.0L), n);
    const long double d = 0.5L * (dn + 1.0L / dn);
    long double b = -1.0L, c = -d;
    CL acc = 0.0L;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        acc += c * cpow(2 * k + 1, -sl);
        b *= ld(k + n) * ld(k - n) / ((ld(k) + 0.5L) * ld(k + 1));
    }
    return Cplx(double(acc.real() / d), double(acc.imag() / d));
}

} // namespace vlab::sf
