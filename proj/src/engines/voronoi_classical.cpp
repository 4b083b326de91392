// Two-sided evaluation of the classical Voronoi summation formulas for the
// divisor function and for sums of two squares, on smooth bump test
// functions. The kernel integrals are Gauss-Legendre panel sums with panel
// count tied to the kernel wavelength (the phase is 4 pi sqrt(nx) resp.
// 2 pi sqrt(nx), so panels scale like sqrt(n) times the bump's sqrt-width).

#include "vlab/engines.hpp"

#include "vlab/parallel.hpp"
#include "vlab/quadrature.hpp"
#include "vlab/special.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vlab::engines {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = std::numbers::egamma;

std::int64_t now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

int panels_for(double sqrt_n, double a, double b, double cycles_per_unit_phase) {
    const double cycles = cycles_per_unit_phase * sqrt_n * (std::sqrt(b) - std::sqrt(a));
    return std::max(6, int(std::ceil(2.2 * cycles)) + 4);
}

// Stops once the recent-window term magnitude drops below the scaled
// tolerance (individual oscillatory terms can be accidentally small).
struct TailStopper {
    double tol;
    int window = 0;
    double recent_max = 0.0;
    bool done(double term_mag) {
        recent_max = std::max(recent_max, term_mag);
        if (++window < 6) return false;
        const bool stop = recent_max < tol;
        recent_max = 0.0;
        window = 0;
        return stop;
    }
};

} // namespace

VerificationReport verify_voronoi_divisor(const TestFunction& f,
                                          const TruncationPolicy& trunc,
                                          unsigned threads) {
    if (f.family() != mellin::Family::SmoothBump)
        throw std::domain_error("verify_voronoi_divisor: needs a smooth bump");
    const auto t0 = now_ms();
    const double a = f.support_lo(), b = f.support_hi();

    VerificationReport rep;
    rep.formula = "voronoi-divisor";

    // LHS over the integers inside the support.
    {
        std::vector<double> terms;
        for (std::int64_t n = std::int64_t(std::ceil(a)); n <= std::int64_t(std::floor(b)); ++n)
            terms.push_back(double(arith::divisor_count(n)) * f(double(n)));
        rep.lhs = pairwise_sum(terms);
        rep.truncation.lhs_terms = std::int64_t(terms.size());
    }

    // Main term int f(x)(log x + 2 gamma) dx.
    const double main_term = quad::integrate_adaptive(
        [&](double x) { return f(x) * (std::log(x) + 2.0 * kEulerGamma); }, a, b,
        1e-12, 8);

    auto kernel_integral = [&](std::int64_t n) {
        const double sq = std::sqrt(double(n));
        const int panels = panels_for(sq, a, b, 2.0);  // phase 4 pi sqrt(nx)
        const bool keep_k0 = 4.0 * kPi * sq * std::sqrt(a) < 45.0;
        auto g = [&](double x) {
            const double z = 4.0 * kPi * std::sqrt(double(n) * x);
            double kern = -2.0 * kPi * sf::bessel(sf::BesselKind::Y0, z);
            if (keep_k0) kern += 4.0 * sf::bessel(sf::BesselKind::K0, z);
            return f(x) * kern;
        };
        return quad::gl_panels(g, a, b, panels);
    };

    // Find the truncation point with a serial scan, then fill the terms in
    // a deterministic parallel map.
    const double scale = std::max(1.0, std::fabs(rep.lhs));
    TailStopper stop{trunc.tail_tol * scale * 0.05};
    std::int64_t nmax = trunc.max_terms;
    std::vector<std::int64_t> dvals;
    for (std::int64_t n = 1; n <= trunc.max_terms; ++n) {
        dvals.push_back(arith::divisor_count(n));
        if (trunc.strategy == TruncationPolicy::Strategy::TailBound && n % 8 == 0 &&
            n >= 32) {
            // probe the envelope cheaply before evaluating every integral
            const double probe = std::fabs(double(dvals.back()) * kernel_integral(n));
            if (stop.done(probe * 6.0)) {
                nmax = n;
                break;
            }
        }
    }
    nmax = std::min<std::int64_t>(nmax, std::int64_t(dvals.size()));
    const auto terms = parallel_map<double>(std::size_t(nmax), threads, [&](std::size_t i) {
        const std::int64_t n = std::int64_t(i) + 1;
        return double(dvals[i]) * kernel_integral(n);
    });
    rep.rhs = main_term + pairwise_sum(terms);
    rep.truncation.rhs_terms = nmax;
    rep.truncation.rhs_tail =
        std::fabs(double(arith::divisor_count(nmax + 1)) * kernel_integral(nmax + 1));

    rep.finalize();
    rep.runtime_ms = now_ms() - t0;
    return rep;
}

VerificationReport verify_voronoi_circle(const TestFunction& f,
                                         const TruncationPolicy& trunc,
                                         unsigned threads) {
    if (f.family() != mellin::Family::SmoothBump)
        throw std::domain_error("verify_voronoi_circle: needs a smooth bump");
    const auto t0 = now_ms();
    const double a = f.support_lo(), b = f.support_hi();

    VerificationReport rep;
    rep.formula = "voronoi-circle";

    std::int64_t r2_needed = std::int64_t(std::floor(b)) + 1;
    arith::CoefficientTable r2tab = arith::r2_table(std::max<std::int64_t>(r2_needed, 8));

    {
        std::vector<double> terms;
        for (std::int64_t n = std::int64_t(std::ceil(a)); n <= std::int64_t(std::floor(b)); ++n)
            terms.push_back(double(r2tab.exact(n)) * f(double(n)));
        rep.lhs = pairwise_sum(terms);
        rep.truncation.lhs_terms = std::int64_t(terms.size());
    }

    auto kernel_integral = [&](std::int64_t n) {
        if (n == 0)
            return quad::integrate_adaptive([&](double x) { return f(x); }, a, b, 1e-12, 8);
        const double sq = std::sqrt(double(n));
        const int panels = panels_for(sq, a, b, 1.0);  // phase 2 pi sqrt(nx)
        auto g = [&](double x) {
            return f(x) * sf::bessel(sf::BesselKind::J0,
                                     2.0 * kPi * std::sqrt(double(n) * x));
        };
        return quad::gl_panels(g, a, b, panels);
    };

    const double scale = std::max(1.0, std::fabs(rep.lhs));
    TailStopper stop{trunc.tail_tol * scale * 0.05};
    std::int64_t nmax = trunc.max_terms;
    std::vector<std::int64_t> r2vals{1};  // r2(0) = 1, the origin term
    for (std::int64_t n = 1; n <= trunc.max_terms; ++n) {
        if (n > r2tab.max_index())
            r2tab = arith::r2_table(2 * r2tab.max_index());
        r2vals.push_back(std::int64_t(r2tab.exact(n)));
        if (trunc.strategy == TruncationPolicy::Strategy::TailBound && n % 8 == 0 &&
            n >= 32 && r2vals.back() != 0) {
            const double probe = std::fabs(double(r2vals.back()) * kernel_integral(n));
            if (stop.done(probe * 6.0)) {
                nmax = n;
                break;
            }
        }
    }
    nmax = std::min<std::int64_t>(nmax, std::int64_t(r2vals.size()) - 1);
    const auto terms =
        parallel_map<double>(std::size_t(nmax) + 1, threads, [&](std::size_t i) {
            if (r2vals[i] == 0) return 0.0;
            return kPi * double(r2vals[i]) * kernel_integral(std::int64_t(i));
        });
    rep.rhs = pairwise_sum(terms);
    rep.truncation.rhs_terms = nmax + 1;
    rep.truncation.rhs_tail =
        std::fabs(double(arith::r2(nmax + 1, arith::R2Method::Character)) *
                  kernel_integral(nmax + 1));

    rep.finalize();
    rep.runtime_ms = now_ms() - t0;
    return rep;
}

} // namespace vlab::engines
