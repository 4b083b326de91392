#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vlab/special.hpp"
#include "refvalues.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

using namespace vlab::sf;
using std::fabs;

namespace {

constexpr double kPi = std::numbers::pi;

// Test-local power-series oracle for J0, summed to machine precision.
double j0_series_oracle(double x) {
    long double term = 1.0L, sum = 1.0L;
    const long double q = (long double)x * x / 4.0L;
    for (int k = 1; k < 60; ++k) {
        term *= -q / ((long double)k * k);
        sum += term;
    }
    return double(sum);
}

} // namespace

TEST_CASE("log_gamma: classical values and reference points") {
    CHECK(std::abs(log_gamma({1.0, 0.0})) < 1e-15);
    CHECK(log_gamma({0.5, 0.0}).real() == doctest::Approx(std::log(std::sqrt(kPi))).epsilon(1e-14));
    CHECK(log_gamma({4.0, 0.0}).real() == doctest::Approx(std::log(6.0)).epsilon(1e-14));
    for (const auto& r : refval::kLogGamma) {
        const Cplx got = log_gamma({r.re, r.im});
        CHECK(std::abs(got - Cplx(r.vre, r.vim)) < 1e-12 * (1.0 + std::abs(got)));
    }
    CHECK_THROWS_AS(log_gamma({0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(log_gamma({-3.0, 0.0}), std::domain_error);
}

TEST_CASE("log_gamma: recurrence and reflection on a grid") {
    // 100 points in |s| <= 20, off the poles
    std::mt19937 rng(7101);
    std::uniform_real_distribution<double> uni(-20.0, 20.0);
    int tested = 0;
    while (tested < 100) {
        Cplx s(uni(rng), uni(rng));
        if (std::abs(s) > 20.0) continue;
        if (s.imag() == 0.0) s += Cplx(0.0, 1e-3);
        // stay a bit away from the poles and the reflection seam
        if (std::fabs(s.imag()) < 0.05 && s.real() < 0.5) continue;
        ++tested;
        const Cplx g_s = std::exp(log_gamma(s));
        const Cplx g_s1 = std::exp(log_gamma(s + 1.0));
        CHECK(std::abs(g_s1 - s * g_s) / std::abs(g_s1) < 1e-11);
        const Cplx refl = g_s * std::exp(log_gamma(1.0 - s)) * std::sin(kPi * s) / kPi;
        CHECK(std::abs(refl - 1.0) < 1e-10);
    }
}

TEST_CASE("archimedean gamma factors") {
    CHECK(gamma_archimedean({1.0, 0.0}, GammaKind::R).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_archimedean({1.0, 0.0}, GammaKind::C).real() == doctest::Approx(1.0 / kPi).epsilon(1e-14));
    CHECK(gamma_archimedean({2.0, 0.0}, GammaKind::R).real() == doctest::Approx(1.0 / kPi).epsilon(1e-14));
    CHECK_THROWS_AS(gamma_archimedean({0.0, 0.0}, GammaKind::R), std::domain_error);
    CHECK_THROWS_AS(gamma_archimedean({-2.0, 0.0}, GammaKind::C), std::domain_error);
}

TEST_CASE("bessel: reference grid at 1e-12 absolute") {
    for (const auto& r : refval::kJ0) CHECK(fabs(bessel(BesselKind::J0, r.x) - r.value) < 1e-12);
    for (const auto& r : refval::kJ1) CHECK(fabs(bessel(BesselKind::J1, r.x) - r.value) < 1e-12);
    for (const auto& r : refval::kY0) CHECK(fabs(bessel(BesselKind::Y0, r.x) - r.value) < 1e-12);
    for (const auto& r : refval::kK0) CHECK(fabs(bessel(BesselKind::K0, r.x) - r.value) < 1e-12);
    CHECK(bessel(BesselKind::J0, 0.0) == 1.0);
    CHECK(bessel(BesselKind::J0, 1.0) == doctest::Approx(refval::kJ0_at_1).epsilon(1e-14));
    CHECK_THROWS_AS(bessel(BesselKind::Y0, 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel(BesselKind::K0, -1.0), std::domain_error);
}

TEST_CASE("bessel: series oracle at small arguments") {
    for (double x : {0.25, 0.5, 1.0, 2.0, 4.0})
        CHECK(fabs(bessel(BesselKind::J0, x) - j0_series_oracle(x)) < 1e-14);
}

TEST_CASE("bessel: series and asymptotic branches cross-validate on [8,16]") {
    using namespace vlab::sf::detail;
    for (const BesselKind k : {BesselKind::J0, BesselKind::J1, BesselKind::Y0}) {
        for (double x = 8.0; x <= 16.0; x += 0.25) {
            const double diff = fabs(bessel_series(k, x) - bessel_asymptotic(k, x));
            CHECK(diff < 3e-8);              // asymptotic floor near x = 8
            if (x >= 12.0) CHECK(diff < 3e-12);
        }
    }
    for (double x = 8.0; x <= 12.0; x += 0.25)
        CHECK(fabs(bessel_series(BesselKind::K0, x) - bessel_asymptotic(BesselKind::K0, x)) < 1e-12);
}

TEST_CASE("bessel: derivative relation J0' = -J1 at second order") {
    for (double x : {1.0, 5.0, 20.0}) {
        auto defect = [&](double h) {
            return fabs((bessel(BesselKind::J0, x + h) - bessel(BesselKind::J0, x - h)) /
                            (2.0 * h) +
                        bessel(BesselKind::J1, x));
        };
        const double e1 = defect(1e-3), e2 = defect(5e-4);
        CHECK(e1 < 1e-6);
        CHECK(e2 < e1 / 2.5);  // O(h^2) shrinkage
    }
}

TEST_CASE("bessel: |J1(x)| sqrt(x) stays near its stationary-phase bound") {
    double sup = 0.0;
    for (double x = 1.0; x <= 1000.0; x += 0.37)
        sup = std::max(sup, fabs(bessel(BesselKind::J1, x)) * std::sqrt(x));
    CHECK(sup < 0.85);
    CHECK(sup > 0.6);
}

TEST_CASE("K of complex order: reference values and symmetries") {
    for (const auto& r : refval::kKnu) {
        const Cplx got = bessel_K_complex_order({r.sre, r.sim}, r.x);
        const Cplx want(r.vre, r.vim);
        CHECK(std::abs(got - want) < 1e-9 * std::abs(want));
    }
    // consistency with real-order K0
    CHECK(std::abs(bessel_K_complex_order({0.0, 0.0}, 2.0) -
                   bessel(BesselKind::K0, 2.0)) < 1e-12);
    // evenness in the order
    const Cplx s(0.7, 2.3);
    CHECK(std::abs(bessel_K_complex_order(s, 1.5) - bessel_K_complex_order(-s, 1.5)) < 1e-12);
    // half-integer closed form K_{1/2}(x) = sqrt(pi/(2x)) e^{-x}
    const double k_half = std::sqrt(kPi / 4.0) * std::exp(-2.0);
    CHECK(std::abs(bessel_K_complex_order({0.5, 0.0}, 2.0) - k_half) < 1e-11);
    CHECK_THROWS_AS(bessel_K_complex_order({0.0, 0.0}, -1.0), std::domain_error);
}

TEST_CASE("zeta: classical values, reference grid, pole") {
    CHECK(zeta({2.0, 0.0}).real() == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-13));
    CHECK(zeta({0.0, 0.0}).real() == doctest::Approx(-0.5).epsilon(1e-14));
    for (const auto& r : refval::kZeta) {
        const Cplx got = zeta({r.re, r.im});
        const Cplx want(r.vre, r.vim);
        CHECK(std::abs(got - want) < 1e-10 * std::abs(want));
    }
    CHECK_THROWS_AS(zeta({1.0, 0.0}), std::domain_error);
}

TEST_CASE("xi: functional equation and pole structure") {
    CHECK(std::abs(xi({0.3, 4.0}) - xi({0.7, -4.0})) < 1e-12);
    CHECK(std::abs(xi({2.0, 0.0}) - xi({-1.0, 0.0})) < 1e-13);
    CHECK(fabs(xi({0.5, 0.0}).imag()) < 1e-14);  // real on the critical line

    std::mt19937 rng(40961);
    std::uniform_real_distribution<double> re(-2.0, 3.0), im(-30.0, 30.0);
    for (int i = 0; i < 50; ++i) {
        Cplx s(re(rng), im(rng));
        if (std::abs(s) < 0.1 || std::abs(s - 1.0) < 0.1) continue;
        const Cplx a = xi(s), b = xi(1.0 - s);
        CHECK(std::abs(a - b) < 1e-9 * (1.0 + std::abs(a)));
    }

    // s(s-1) xi(s) stays finite through the pole at s = 1
    auto reg = [](Cplx s) { return s * (s - 1.0) * xi(s); };
    const Cplx above = reg({1.001, 0.0}), below = reg({0.999, 0.0});
    CHECK(std::isfinite(above.real()));
    CHECK(std::abs(above - below) < 1e-2 * std::abs(above));
    CHECK_THROWS_AS(xi({0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(xi({1.0, 0.0}), std::domain_error);
}

TEST_CASE("L(s, chi4): Leibniz value, reference grid, functional equation") {
    CHECK(dirichlet_L_chi4({1.0, 0.0}).real() == doctest::Approx(kPi / 4.0).epsilon(1e-13));
    for (const auto& r : refval::kLChi4) {
        const Cplx got = dirichlet_L_chi4({r.re, r.im});
        const Cplx want(r.vre, r.vim);
        CHECK(std::abs(got - want) < 1e-10 * std::max(1.0, std::abs(want)));
    }
    // L(s) = 2^{1-2s} pi^{(2s-1)/2} (Gamma((2-s)/2) / Gamma((s+1)/2)) L(1-s)
    const Cplx s(0.7, 0.0);
    const Cplx rhs = std::exp((1.0 - 2.0 * s) * std::numbers::ln2 +
                              (2.0 * s - 1.0) / 2.0 * std::log(kPi) +
                              log_gamma((2.0 - s) / 2.0) - log_gamma((s + 1.0) / 2.0)) *
                     dirichlet_L_chi4(1.0 - s);
    CHECK(std::abs(dirichlet_L_chi4(s) - rhs) < 1e-9);
}

TEST_CASE("theta: values and modular identity") {
    CHECK(fabs(theta(50.0) - 1.0) < 1e-17);
    CHECK(theta(1.0) == doctest::Approx(refval::kTheta_at_1).epsilon(1e-14));
    for (const auto& r : refval::kTheta) CHECK(fabs(theta(r.x) - r.value) < 1e-14);
    for (double t = 0.1; t <= 10.0 + 1e-12; t += 0.1)
        CHECK(fabs(std::sqrt(t) * theta(t) - theta(1.0 / t)) < 1e-12);
    CHECK_THROWS_AS(theta(0.0), std::domain_error);
    CHECK_THROWS_AS(theta(-1.0), std::domain_error);
}
