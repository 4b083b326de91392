// The mollified disc indicator, its Fourier profile, the smoothed summation
// identity, and the three bounding terms of the error-term argument.
//
// The mollifier is the standard bump c exp(-1/(1-|v|^2)) on the unit disc,
// normalized to unit mass. Radial symmetry reduces everything to
// one-dimensional integrals:
//   profile f_X(r): angular measure of the disc of radius sqrt(X) seen from
//     radius r, averaged against the bump (quadrature in the bump radius);
//   psi(rho): 2 pi int_0^1 phi(u) J0(2 pi rho u) u du, tabulated once on a
//     uniform grid with cubic interpolation.

#include "vlab/lattice.hpp"

#include "vlab/coefficients.hpp"
#include "vlab/parallel.hpp"
#include "vlab/quadrature.hpp"
#include "vlab/special.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace vlab::lattice {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPsiGridStep = 0.01;
constexpr double kPsiGridMax = 64.0;

double bump(double u) {  // unnormalized radial bump on [0, 1)
    if (u >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - u * u));
}

double bump_mass() {
    static const double mass = 2.0 * kPi *
        quad::integrate_adaptive([](double u) { return bump(u) * u; }, 0.0, 1.0,
                                 1e-13, 8);
    return mass;
}

const std::vector<double>& psi_grid() {
    static const std::vector<double> grid = [] {
        const double norm = 1.0 / bump_mass();
        const std::size_t n = std::size_t(kPsiGridMax / kPsiGridStep) + 2;
        std::vector<double> g(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double rho = double(i) * kPsiGridStep;
            const int panels = 8 + int(2.0 * rho);
            g[i] = norm * 2.0 * kPi *
                   quad::gl_panels(
                       [&](double u) {
                           return bump(u) * u *
                                  sf::bessel(sf::BesselKind::J0, 2.0 * kPi * rho * u);
                       },
                       0.0, 1.0, panels);
        }
        return g;
    }();
    return grid;
}

std::int64_t now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

} // namespace

SmoothedIndicator::SmoothedIndicator(double X, Mollifier kind)
    : X_(X), delta_(std::pow(X, -1.0 / 6.0)), kind_(kind) {
    if (X <= 1.0) throw std::domain_error("SmoothedIndicator: X must be > 1");
}

double SmoothedIndicator::psi(double rho) {
    const auto& grid = psi_grid();
    const double a = std::fabs(rho);
    if (a >= kPsiGridMax) return 0.0;
    const double u = a / kPsiGridStep;
    std::size_t i = std::size_t(u);
    if (i > 0) --i;
    if (i + 3 >= grid.size()) i = grid.size() - 4;
    const double x = u - double(i);
    const double c0 = -(x - 1) * (x - 2) * (x - 3) / 6.0;
    const double c1 = x * (x - 2) * (x - 3) / 2.0;
    const double c2 = -x * (x - 1) * (x - 3) / 2.0;
    const double c3 = x * (x - 1) * (x - 2) / 6.0;
    return c0 * grid[i] + c1 * grid[i + 1] + c2 * grid[i + 2] + c3 * grid[i + 3];
}

double SmoothedIndicator::profile(double r) const {
    if (kind_ == Mollifier::GaussianDegenerate) return std::exp(-kPi * r * r / X_);
    const double edge = std::sqrt(X_);
    if (r <= edge - delta_) return 1.0;
    if (r >= edge + delta_) return 0.0;

    // Angular fraction of the sqrt(X)-disc seen at distance rho = delta u
    // from the lattice point, integrated against the bump. Circles with
    // u < u_star do not reach the disc edge; the acos has a sqrt-type kink
    // at u_star, smoothed by integrating in w with u = u_star + w^2.
    const double norm = 1.0 / bump_mass();
    const double u_star = std::fabs(edge - r) / delta_;  // in [0, 1]
    double inner = 0.0;
    if (r < edge && u_star > 0.0)
        inner = quad::integrate_adaptive(
            [&](double u) { return bump(u) * u; }, 0.0, u_star, 1e-12, 4);
    auto frac_at = [&](double u) {
        const double rho = delta_ * u;
        const double cosangle = (r * r + rho * rho - X_) / (2.0 * r * rho);
        if (cosangle <= -1.0) return 1.0;
        if (cosangle >= 1.0) return 0.0;
        return std::acos(cosangle) / kPi;
    };
    const double wmax = std::sqrt(std::max(0.0, 1.0 - u_star));
    const double partial = quad::integrate_adaptive(
        [&](double w) {
            const double u = u_star + w * w;
            return bump(u) * u * frac_at(u) * 2.0 * w;
        },
        0.0, wmax, 1e-12, 8);
    return norm * 2.0 * kPi * (inner + partial);
}

double SmoothedIndicator::operator()(double vx, double vy) const {
    return profile(std::hypot(vx, vy));
}

engines::VerificationReport smoothed_circle_identity(
    double X, SmoothedIndicator::Mollifier kind, double tail_tol,
    unsigned threads) {
    const auto t0 = now_ms();
    engines::VerificationReport rep;
    rep.formula = "smoothed-circle";

    const SmoothedIndicator F(X, kind);

    if (kind == SmoothedIndicator::Mollifier::GaussianDegenerate) {
        // plain Gaussian two-dimensional summation: LHS = sum r2(n) e^{-pi n / X},
        // RHS = X sum r2(n) e^{-pi n X}
        const auto nmax = std::int64_t(45.0 / kPi * X) + 2;
        const auto r2 = arith::r2_table(nmax);
        std::vector<double> lhs_terms;
        lhs_terms.push_back(1.0);
        for (std::int64_t n = 1; n <= nmax; ++n)
            lhs_terms.push_back(double(r2.exact(n)) * std::exp(-kPi * n / X));
        rep.lhs = pairwise_sum(lhs_terms);
        std::vector<double> rhs_terms;
        rhs_terms.push_back(1.0);
        for (std::int64_t n = 1; kPi * n * X < 45.0; ++n)
            rhs_terms.push_back(double(r2.exact(n)) * std::exp(-kPi * n * X));
        rep.rhs = X * pairwise_sum(rhs_terms);
        rep.truncation.lhs_terms = std::int64_t(lhs_terms.size());
        rep.truncation.rhs_terms = std::int64_t(rhs_terms.size());
        rep.finalize();
        rep.runtime_ms = now_ms() - t0;
        return rep;
    }

    const double delta = F.delta();
    const double edge = std::sqrt(X);

    // LHS: exact count strictly inside, profile values across the annulus.
    const auto inner_n = std::int64_t(std::floor((edge - delta) * (edge - delta)));
    const auto outer_n = std::int64_t(std::floor((edge + delta) * (edge + delta)));
    const auto r2 = arith::r2_table(outer_n + 1);
    double lhs = double(circle_lattice_count(double(inner_n), threads)) + 1.0;  // origin
    {
        std::vector<std::int64_t> annulus;
        for (std::int64_t n = inner_n + 1; n <= outer_n; ++n)
            if (r2.exact(n) != 0) annulus.push_back(n);
        const auto vals = parallel_map<double>(
            annulus.size(), threads, [&](std::size_t i) {
                const std::int64_t n = annulus[i];
                return double(r2.exact(n)) * F.profile(std::sqrt(double(n)));
            });
        lhs += pairwise_sum(vals);
        rep.truncation.lhs_terms = inner_n + std::int64_t(annulus.size());
    }
    rep.lhs = lhs;

    // RHS: pi X + sqrt(X) sum n^{-1/2} r2(n) psi(delta sqrt n) J1(2 pi sqrt(nX)).
    std::int64_t nmax = std::int64_t((kPsiGridMax / delta) * (kPsiGridMax / delta));
    const auto r2_dual = arith::r2_table(nmax + 1);
    // find the effective cutoff from psi's decay
    std::int64_t ncut = nmax;
    for (std::int64_t n = 1; n <= nmax; ++n) {
        const double envelope = 4.0 * std::sqrt(X) *
                                std::fabs(SmoothedIndicator::psi(delta * std::sqrt(double(n)))) /
                                std::sqrt(double(n));
        if (envelope < tail_tol * 1e-2 && n > std::int64_t(1.0 / (delta * delta))) {
            ncut = n;
            break;
        }
    }
    const auto terms = parallel_map<double>(std::size_t(ncut), threads, [&](std::size_t i) {
        const std::int64_t n = std::int64_t(i) + 1;
        const auto rv = r2_dual.exact(n);
        if (rv == 0) return 0.0;
        const double sq = std::sqrt(double(n));
        return double(rv) / sq * SmoothedIndicator::psi(delta * sq) *
               sf::bessel(sf::BesselKind::J1, 2.0 * kPi * std::sqrt(double(n) * X));
    });
    rep.rhs = kPi * X + std::sqrt(X) * pairwise_sum(terms);
    rep.truncation.rhs_terms = ncut;
    rep.truncation.rhs_tail =
        4.0 * std::sqrt(X / double(ncut)) *
        std::fabs(SmoothedIndicator::psi(delta * std::sqrt(double(ncut + 1))));

    rep.finalize();
    rep.runtime_ms = now_ms() - t0;
    return rep;
}

BoundTerms bound_terms(double X, unsigned threads) {
    if (X < 100.0) throw std::domain_error("bound_terms: X >= 100");
    BoundTerms out;
    const double delta = std::pow(X, -1.0 / 6.0);
    const double edge = std::sqrt(X);

    // B1: lattice mass of the annulus sqrt(X) - delta <= sqrt(n) <= sqrt(X) + delta
    const double lo = (edge - delta) * (edge - delta);
    const double hi = (edge + delta) * (edge + delta);
    const auto below = std::int64_t(std::ceil(lo)) - 1;
    out.b1 = double(circle_lattice_count(hi, threads) -
                    circle_lattice_count(double(below), threads));

    // B2 and B3: absolute dual sums split at delta^{-2}
    const auto split = std::int64_t(1.0 / (delta * delta));
    const auto nmax = std::int64_t((kPsiGridMax / delta) * (kPsiGridMax / delta));
    const auto r2 = arith::r2_table(nmax + 1);
    auto term = [&](std::int64_t n) {
        const auto rv = r2.exact(n);
        if (rv == 0) return 0.0;
        const double sq = std::sqrt(double(n));
        return double(rv) / sq *
               std::fabs(SmoothedIndicator::psi(delta * sq) *
                         sf::bessel(sf::BesselKind::J1, 2.0 * kPi * std::sqrt(double(n) * X)));
    };
    {
        const auto v2 = parallel_map<double>(std::size_t(split), threads, [&](std::size_t i) {
            return term(std::int64_t(i) + 1);
        });
        out.b2 = std::sqrt(X) * pairwise_sum(v2);
        const auto v3 = parallel_map<double>(std::size_t(nmax - split), threads,
                                             [&](std::size_t i) {
            return term(split + std::int64_t(i) + 1);
        });
        out.b3 = std::sqrt(X) * pairwise_sum(v3);
    }

    out.delta_x = delta_circle(X, threads);
    out.inequality_ok = out.delta_x <= out.b1 + out.b2 + out.b3 + 1e-9;
    return out;
}

} // namespace vlab::lattice
