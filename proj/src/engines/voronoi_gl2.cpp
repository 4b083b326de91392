// Additively twisted GL(2) summation: coefficients on one side, the
// Mellin-Barnes kernel transform on the other. Twist phases are taken from
// an integer-indexed root-of-unity table, so equivalent twists (a and a + c)
// produce bit-identical reports.

#include "vlab/engines.hpp"

#include "vlab/parallel.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace vlab::engines {

namespace {

using mellin::Cplx;

std::int64_t now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

} // namespace

namespace {

// e(k / c) for k = 0..|c|-1
std::vector<Cplx> unit_roots(std::int64_t c) {
    const std::int64_t cc = std::llabs(c);
    std::vector<Cplx> roots(static_cast<std::size_t>(cc));
    for (std::int64_t k = 0; k < cc; ++k) {
        const double phase = 2.0 * std::numbers::pi * double(k) / double(cc);
        roots[std::size_t(k)] = Cplx(std::cos(phase), std::sin(phase));
    }
    return roots;
}

} // namespace

VerificationReport verify_gl2_voronoi(const CoefficientTable& coeffs,
                                      const Gl2Params& params,
                                      const TwistParams& twist,
                                      const TestFunction& f,
                                      const TruncationPolicy& trunc,
                                      unsigned threads) {
    if (coeffs.kind() != arith::TableKind::NormalizedGL2)
        throw std::invalid_argument("verify_gl2_voronoi: wrong coefficient kind");
    if (f.family() != mellin::Family::ExpInverse)
        throw std::domain_error("verify_gl2_voronoi: needs the exp-inverse family");
    const auto t0 = now_ms();

    VerificationReport rep;
    rep.formula = "gl2";

    // sign of c folds into the twist phases; magnitudes elsewhere
    const std::int64_t c = std::llabs(twist.c);
    const std::int64_t csgn = twist.c < 0 ? -1 : 1;
    const auto roots = unit_roots(c);
    auto root = [&](std::int64_t k) {
        return roots[std::size_t(((k % c) + c) % c)];
    };

    const double growth = coeffs.growth_bound();  // crude |a_n| <= growth * n

    // LHS: holomorphic coefficients vanish at negative index, so the sum
    // runs over n > 0 (and f itself vanishes on x < 0).
    std::int64_t lhs_terms = 0;
    {
        std::vector<Cplx> terms;
        for (std::int64_t n = 1; n <= trunc.max_terms; ++n) {
            if (n > coeffs.max_index())
                throw std::out_of_range("verify_gl2_voronoi: coefficient table "
                                        "shorter than the truncation point");
            terms.push_back(coeffs.value(n) * root(-csgn * twist.a * n) * f(double(n)));
            if (trunc.strategy == TruncationPolicy::Strategy::TailBound &&
                growth * double(n) * f(double(n)) < trunc.tail_tol * 1e-2 && n >= 8)
                break;
        }
        lhs_terms = std::int64_t(terms.size());
        const Cplx lhs = pairwise_sum(terms);
        if (std::fabs(lhs.imag()) > 1e-9 * std::max(1.0, std::fabs(lhs.real())))
            throw std::runtime_error("verify_gl2_voronoi: LHS not real");
        rep.lhs = lhs.real();
        rep.truncation.lhs_terms = lhs_terms;
        rep.truncation.lhs_tail = growth * double(lhs_terms + 1) * f(double(lhs_terms + 1));
    }

    // RHS: |c| sum (a_n / n) e(n a_bar / c) F(n / c^2).
    const mellin::VoronoiKernelTransform F(f, params);
    const double c2 = double(c) * double(c);
    std::int64_t nmax = 0;
    {
        double window_max = 0.0;
        for (std::int64_t n = 1; n <= trunc.max_terms; ++n) {
            if (n > coeffs.max_index())
                throw std::out_of_range("verify_gl2_voronoi: coefficient table "
                                        "shorter than the dual truncation point");
            const double mag = growth * std::abs(F(double(n) / c2));
            window_max = std::max(window_max, mag);
            nmax = n;
            if (trunc.strategy == TruncationPolicy::Strategy::TailBound && n % 8 == 0 &&
                n >= 24) {
                if (window_max < trunc.tail_tol * 1e-2) break;
                window_max = 0.0;
            }
        }
    }
    const auto terms = parallel_map<Cplx>(std::size_t(nmax), threads, [&](std::size_t i) {
        const std::int64_t n = std::int64_t(i) + 1;
        return coeffs.value(n) / double(n) * root(csgn * twist.a_bar * n) *
               F(double(n) / c2);
    });
    const Cplx rhs = double(c) * pairwise_sum(terms);
    if (std::fabs(rhs.imag()) > 1e-9 * std::max(1.0, std::fabs(rhs.real())))
        throw std::runtime_error("verify_gl2_voronoi: RHS not real");
    rep.rhs = rhs.real();
    rep.truncation.rhs_terms = nmax;
    rep.truncation.rhs_tail = growth * std::abs(F(double(nmax + 1) / c2));

    std::ostringstream notes;
    notes << "twist=(" << twist.a << "," << twist.c << ") nu=" << params.nu.real()
          << " growth_bound=" << growth;
    rep.convention_notes = notes.str();

    rep.finalize();
    rep.runtime_ms = now_ms() - t0;
    return rep;
}

} // namespace vlab::engines
