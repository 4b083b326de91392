// Complex log-gamma via Stirling with recurrence shift, reflection for the
// left half plane, and the Gamma_R / Gamma_C wrappers.

#include "vlab/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vlab::sf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLog2Pi = 1.8378770664093454836;  // log(2 pi)

// B_{2k} / (2k (2k-1)) for k = 1..10.
constexpr double kStirlingCoeff[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

bool is_nonpositive_integer(Cplx s) {
    return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

// Stirling series, requires Re s >= 10.
Cplx stirling(Cplx s) {
    const Cplx ls = std::log(s);
    Cplx sum = (s - 0.5) * ls - s + 0.5 * kLog2Pi;
    const Cplx s2 = s * s;
    Cplx spow = s;
    for (double c : kStirlingCoeff) {
        sum += c / spow;
        spow *= s2;
    }
    return sum;
}

// Branch of log sin(pi z) analytic for Im z >= 0, continuous onto the real
// axis from above: sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}).
Cplx log_sin_pi_upper(Cplx z) {
    const Cplx i(0.0, 1.0);
    const Cplx w = std::exp(2.0 * kPi * i * z);  // |w| <= 1 for Im z >= 0
    return Cplx(-std::numbers::ln2, kPi / 2.0) - i * kPi * z + std::log(1.0 - w);
}

} // namespace

Cplx log_gamma(Cplx s) {
    if (is_nonpositive_integer(s))
        throw std::domain_error("log_gamma: pole at nonpositive integer");
    if (s.imag() < 0.0) return std::conj(log_gamma(std::conj(s)));
    if (s.real() < 0.5) {
        // Reflection; valid on Im s >= 0 with the branch above.
        return std::log(kPi) - log_sin_pi_upper(s) - log_gamma(1.0 - s);
    }
    // Shift into Re s >= 10, principal logs throughout (Im s >= 0 keeps all
    // shifted points in the closed upper half plane, so no cut crossings).
    Cplx shift = 0.0;
    Cplx z = s;
    while (z.real() < 10.0) {
        shift += std::log(z);
        z += 1.0;
    }
    return stirling(z) - shift;
}

Cplx gamma_archimedean(Cplx s, GammaKind kind) {
    if (kind == GammaKind::R) {
        if (is_nonpositive_integer(s / 2.0))
            throw std::domain_error("gamma_archimedean: Gamma_R pole");
        return std::exp(log_gamma(s / 2.0) - (s / 2.0) * std::log(kPi));
    }
    if (is_nonpositive_integer(s))
        throw std::domain_error("gamma_archimedean: Gamma_C pole");
    return 2.0 * std::exp(log_gamma(s) - s * kLog2Pi);
}

} // namespace vlab::sf
