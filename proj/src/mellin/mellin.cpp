#include "vlab/mellin.hpp"

#include "vlab/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vlab::mellin {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_nonpositive_integer(Cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

} // namespace

double mellin_inverse(const std::function<Cplx(Cplx)>& Mf, double x,
                      const ContourSpec& contour, double tail_tol) {
    if (x <= 0.0) throw std::domain_error("mellin_inverse: x must be > 0");
    const double T = contour.height;
    const int n = contour.node_count;
    if (n < 9 || T <= 0.0) throw std::domain_error("mellin_inverse: bad contour");
    const double h = 2.0 * T / (n - 1);
    const double lx = std::log(x);

    Cplx acc = 0.0;
    double tail_mag = 0.0;
    for (int k = 0; k < n; ++k) {
        const double tau = -T + k * h;
        const Cplx s(contour.sigma, tau);
        const Cplx term = Mf(s) * std::exp(-s * lx);
        const double w = (k == 0 || k == n - 1) ? 0.5 : 1.0;
        acc += w * term;
        if (std::abs(tau) > 0.95 * T) tail_mag = std::max(tail_mag, std::abs(term));
    }
    const double result = (acc * (h / (2.0 * kPi))).real();
    // crude tail bound: edge magnitude times one more tranche of the line
    const double tail_estimate = tail_mag * T * 0.1;
    if (tail_estimate > tail_tol * std::max(1.0, std::fabs(result)))
        throw std::runtime_error("mellin_inverse: truncation tail above tolerance");
    return result;
}

Cplx gamma_ratio_kernel(Cplx s, int parity) {
    if (parity != 0 && parity != 1) throw std::domain_error("parity must be 0/1");
    const Cplx num_arg = parity == 0 ? s / 2.0 : (s + 1.0) / 2.0;
    const Cplx den_arg = parity == 0 ? (1.0 - s) / 2.0 : (2.0 - s) / 2.0;
    if (is_nonpositive_integer(num_arg))
        throw std::domain_error("gamma_ratio_kernel: pole");
    if (is_nonpositive_integer(den_arg)) return 0.0;  // kernel zero
    const Cplx val = std::exp((0.5 - s) * std::log(kPi) + sf::log_gamma(num_arg) -
                              sf::log_gamma(den_arg));
    return parity == 0 ? val : kOddKernelUnit * val;
}

double gamma_ratio_pole(int parity, int k) { return -(2.0 * k + parity); }

Cplx gamma_ratio_residue(int parity, int k) {
    // From the product form 2 (2 pi)^{-s} Gamma(s) {cos,sin}(pi s / 2) and
    // Res Gamma at -n = (-1)^n / n!; validated against a numeric limit in
    // the test suite.
    if (k < 0) throw std::domain_error("gamma_ratio_residue: k >= 0");
    const int m = 2 * k + parity;
    double fact = 1.0;
    for (int i = 2; i <= m; ++i) fact *= i;
    const double mag = 2.0 * std::pow(2.0 * kPi, m) / fact * ((k % 2 == 0) ? 1.0 : -1.0);
    return parity == 0 ? Cplx(mag, 0.0) : kOddKernelUnit * Cplx(mag, 0.0);
}

Cplx fourier_kernel_quadrature(Cplx s, int parity) {
    if (s.real() <= 0.0 || s.real() >= 1.0)
        throw std::domain_error("fourier_kernel_quadrature: need 0 < Re s < 1");
    // int_R e^{-2 pi i x}(sgn x)^p |x|^{s-1} dx
    //   = 2 int_0^inf cos(2 pi x) x^{s-1} dx          (p = 0)
    //   = -2i int_0^inf sin(2 pi x) x^{s-1} dx        (p = 1)
    auto power = [&](double x) { return std::exp((s - 1.0) * std::log(x)); };
    Cplx head, tail;
    if (parity == 0) {
        auto g = [&](double x) { return std::cos(2.0 * kPi * x) * power(x); };
        head = quad::integrate_exp_substituted(g, 0.75, s.real(), 1e-12);
        tail = quad::oscillatory_tail(g, 0.75, 0.5, 80, 4);
        return 2.0 * (head + tail);
    }
    auto g = [&](double x) { return std::sin(2.0 * kPi * x) * power(x); };
    head = quad::integrate_exp_substituted(g, 0.5, s.real() + 1.0, 1e-12);
    tail = quad::oscillatory_tail(g, 0.5, 0.5, 80, 4);
    return Cplx(0.0, -2.0) * (head + tail);
}

double cosine_transform(const TestFunction& f, double y) {
    if (!f.is_even()) throw std::domain_error("cosine_transform: f must be even");
    const double hi = f.support_hi();
    const double ay = std::fabs(y);
    const int panels = std::max(8, int(std::ceil(hi * std::max(1.0, 2.0 * ay))));
    auto g = [&](double x) { return f(x) * std::cos(2.0 * kPi * x * y); };
    return 2.0 * quad::gl_panels(g, 0.0, hi, panels);
}

double cosine_transform_check(const TestFunction& f, Cplx s) {
    // MF(s) by direct quadrature of the cosine transform.
    const double yhi = std::sqrt((45.0 + 20.0 * f.hermite_m()) * f.gaussian_t() / kPi) + 1.0;
    auto Fy = [&](double y) { return cosine_transform(f, y) * std::exp((s - 1.0) * std::log(y)); };
    const Cplx MF = quad::integrate_exp_substituted(Fy, 1.0, s.real(), 1e-10) +
                    quad::integrate_adaptive(Fy, 1.0, yhi, 1e-10, 8);
    const Cplx rhs = gamma_ratio_kernel(s, 0) * f.mellin_closed_form(1.0 - s);
    return std::abs(MF - rhs);
}

namespace {

// Approximate starting zeros for the oscillatory tails (panel boundaries
// need not be exact zeros; they just keep the panel sums near-alternating).
constexpr double kJ0TailStart = 8.6537;   // third zero of J0
constexpr double kY0TailStart = 10.2223;  // fourth zero of Y0

Cplx power_integral_head(const std::function<double(double)>& kernel, Cplx s,
                         double cut, double rate) {
    auto g = [&](double u) { return kernel(u) * std::exp((2.0 * s - 1.0) * std::log(u)); };
    return quad::integrate_exp_substituted(g, cut, rate, 1e-11);
}

} // namespace

double bessel_kernel_mellin_check(Cplx s, KernelKind kind) {
    if (s.real() <= 0.0 || s.real() >= 0.75)
        throw std::domain_error("bessel_kernel_mellin_check: need 0 < Re s < 3/4");
    // Substituting x = u^2 gives 2 int_0^inf kernel(u) u^{2s-1} du.
    auto upow = [&](double u) { return std::exp((2.0 * s - 1.0) * std::log(u)); };

    if (kind == KernelKind::CircleKernel) {
        auto j0 = [](double u) { return sf::bessel(sf::BesselKind::J0, u); };
        auto g = [&](double u) { return j0(u) * upow(u); };
        const Cplx head = power_integral_head(j0, s, 1.0, 2.0 * s.real()) +
                          quad::integrate_adaptive(g, 1.0, kJ0TailStart, 1e-11, 8);
        const Cplx tail = quad::oscillatory_tail(g, kJ0TailStart, kPi, 120, 4);
        const Cplx lhs = 2.0 * (head + tail);
        const Cplx rhs = std::exp(s * std::log(4.0) + sf::log_gamma(s) -
                                  sf::log_gamma(1.0 - s));
        return std::abs(lhs - rhs);
    }

    auto k0 = [](double u) { return sf::bessel(sf::BesselKind::K0, u); };
    auto y0 = [](double u) { return sf::bessel(sf::BesselKind::Y0, u); };
    auto gk = [&](double u) { return k0(u) * upow(u); };
    auto gy = [&](double u) { return y0(u) * upow(u); };

    const Cplx k_part = power_integral_head(k0, s, 1.0, 2.0 * s.real()) +
                        quad::integrate_adaptive(gk, 1.0, 45.0, 1e-11, 16);
    const Cplx y_head = power_integral_head(y0, s, 1.0, 2.0 * s.real()) +
                        quad::integrate_adaptive(gy, 1.0, kY0TailStart, 1e-11, 8);
    const Cplx y_tail = quad::oscillatory_tail(gy, kY0TailStart, kPi, 120, 4);
    const Cplx lhs = 2.0 * (4.0 * k_part - 2.0 * kPi * (y_head + y_tail));

    const Cplx ratio = gamma_ratio_kernel(s, 0);
    const Cplx rhs = std::exp(s * std::log(16.0) + 2.0 * s * std::log(kPi)) * ratio * ratio;
    return std::abs(lhs - rhs);
}

} // namespace vlab::mellin
