#include "vlab/engines.hpp"

#include "vlab/mellin.hpp"
#include "vlab/parallel.hpp"
#include "vlab/special.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vlab::engines {

namespace {

using mellin::Cplx;

std::int64_t now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

// LHS sum over n >= 1 for a rapidly decaying f; returns the term count and
// tail estimate through the report fields.
double direct_sum(const TestFunction& f, const TruncationPolicy& trunc,
                  std::int64_t* terms, double* tail) {
    std::vector<double> vals;
    for (std::int64_t n = 1; n <= trunc.max_terms; ++n) {
        const double fn = f(double(n));
        vals.push_back(fn);
        if (trunc.strategy == TruncationPolicy::Strategy::TailBound && n >= 4 &&
            double(n) > f.support_hi() * 0.5) {
            // Gaussian-type decay: the next term bounds the tail well
            if (std::fabs(fn) < trunc.tail_tol * 1e-3) break;
        }
    }
    *terms = std::int64_t(vals.size());
    *tail = std::fabs(f(double(vals.size() + 1)));
    return pairwise_sum(vals);
}

} // namespace

VerificationReport verify_poisson(const TestFunction& f,
                                  const TruncationPolicy& trunc,
                                  unsigned threads) {
    if (!f.is_even())
        throw std::domain_error("verify_poisson: needs an even Schwartz function");
    const auto t0 = now_ms();
    VerificationReport rep;
    rep.formula = "poisson";

    rep.lhs = direct_sum(f, trunc, &rep.truncation.lhs_terms, &rep.truncation.lhs_tail);

    // RHS: int_0^inf f - f(0)/2 + sum F(n). The integral is Mf(1).
    (void)threads;  // the transform sums here are short; reduction is pairwise
    const double integral = f.mellin_closed_form(Cplx(1.0, 0.0)).real();
    std::int64_t nmax = 0;
    std::vector<double> terms;
    for (std::int64_t n = 1; n <= trunc.max_terms; ++n) {
        const double Fn = mellin::cosine_transform(f, double(n));
        terms.push_back(Fn);
        nmax = n;
        if (trunc.strategy == TruncationPolicy::Strategy::TailBound && n >= 3 &&
            std::fabs(Fn) < trunc.tail_tol * 1e-3)
            break;
    }
    rep.rhs = integral - f(0.0) / 2.0 + pairwise_sum(terms);
    rep.truncation.rhs_terms = nmax;
    rep.truncation.rhs_tail = std::fabs(mellin::cosine_transform(f, double(nmax + 1)));

    rep.finalize();
    rep.runtime_ms = now_ms() - t0;
    return rep;
}

VerificationReport verify_poisson_via_zeta(const TestFunction& f, double sigma,
                                           unsigned threads) {
    if (!f.is_even())
        throw std::domain_error("verify_poisson_via_zeta: needs an even function");
    if (sigma <= 1.0)
        throw std::domain_error("verify_poisson_via_zeta: needs sigma > 1");
    const auto t0 = now_ms();
    VerificationReport rep;
    rep.formula = "poisson-zeta";

    TruncationPolicy trunc;
    trunc.tail_tol = 1e-10;
    rep.lhs = direct_sum(f, trunc, &rep.truncation.lhs_terms, &rep.truncation.lhs_tail);

    // vertical line: trapezoid over tau with Mf's superexponential decay
    const double T = 60.0;
    const double h = 0.05;
    const std::size_t n = std::size_t(2.0 * T / h) + 1;
    const auto vals = parallel_map<Cplx>(n, threads, [&](std::size_t k) {
        const Cplx s(sigma, -T + double(k) * h);
        const double w = (k == 0 || k + 1 == n) ? 0.5 : 1.0;
        return w * sf::zeta(s) * f.mellin_closed_form(s);
    });
    const Cplx line = pairwise_sum(vals) * Cplx(h / (2.0 * std::numbers::pi), 0.0);
    if (std::fabs(line.imag()) > 1e-9 * std::max(1.0, std::fabs(line.real())))
        throw std::runtime_error("verify_poisson_via_zeta: contour not real");
    rep.rhs = line.real();
    rep.truncation.rhs_terms = std::int64_t(n);
    rep.truncation.rhs_tail = std::abs(sf::zeta(Cplx(sigma, T)) *
                                       f.mellin_closed_form(Cplx(sigma, T)));

    rep.finalize();
    rep.runtime_ms = now_ms() - t0;
    return rep;
}

double poisson_zeta_residue_check(const TestFunction& f) {
    // contour(2) - contour(-1) should equal Mf(1) - f(0)/2 (poles of
    // zeta(s) Mf(s) at s = 1 and s = 0, the latter carrying zeta(0) = -1/2).
    auto line = [&](double sigma) {
        const double T = 60.0, h = 0.05;
        const std::size_t n = std::size_t(2.0 * T / h) + 1;
        Cplx acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const Cplx s(sigma, -T + double(k) * h);
            const double w = (k == 0 || k + 1 == n) ? 0.5 : 1.0;
            acc += w * sf::zeta(s) * f.mellin_closed_form(s);
        }
        return acc * Cplx(h / (2.0 * std::numbers::pi), 0.0);
    };
    const Cplx high = line(2.0);
    const Cplx low = line(-1.0);
    const Cplx residues = f.mellin_closed_form(Cplx(1.0, 0.0)) - f(0.0) / 2.0;
    return std::abs(high - low - residues);
}

} // namespace vlab::engines
