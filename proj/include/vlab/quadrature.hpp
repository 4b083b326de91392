#pragma once

// Quadrature building blocks: composite Gauss-Legendre panels, adaptive
// refinement, exp-substitution for endpoint singularities, and Euler
// acceleration of near-alternating panel sequences (conditionally convergent
// oscillatory tails).

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace vlab::quad {

// 16-point Gauss-Legendre rule on [-1, 1] (positive half; the rule is
// symmetric).
inline constexpr double kGlNode[8] = {
    0.09501250983763744, 0.28160355077925891, 0.45801677765722739,
    0.61787624440264375, 0.75540440835500303, 0.86563120238783174,
    0.94457502307323258, 0.98940093499164993,
};
inline constexpr double kGlWeight[8] = {
    0.18945061045506850, 0.18260341504492359, 0.16915651939500254,
    0.14959598881657673, 0.12462897125553387, 0.09515851168249278,
    0.06225352393864789, 0.02715245941175409,
};

template <typename F>
auto gl_panel(F&& f, double a, double b) {
    using R = std::invoke_result_t<F, double>;
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    R acc{};
    for (int i = 0; i < 8; ++i) {
        const double dx = half * kGlNode[i];
        acc += kGlWeight[i] * (f(mid + dx) + f(mid - dx));
    }
    return R(acc * half);
}

template <typename F>
auto gl_panels(F&& f, double a, double b, int panels) {
    using R = std::invoke_result_t<F, double>;
    R acc{};
    const double w = (b - a) / panels;
    for (int k = 0; k < panels; ++k) acc += gl_panel(f, a + k * w, a + (k + 1) * w);
    return acc;
}

// Doubles the panel count until two refinements agree.
template <typename F>
auto integrate_adaptive(F&& f, double a, double b, double rel_tol,
                        int initial_panels = 4, int max_doublings = 12) {
    using R = std::invoke_result_t<F, double>;
    int n = initial_panels;
    R prev = gl_panels(f, a, b, n);
    for (int i = 0; i < max_doublings; ++i) {
        n *= 2;
        R cur = gl_panels(f, a, b, n);
        if (std::abs(cur - prev) <= rel_tol * std::abs(cur) + 1e-305) return cur;
        prev = cur;
    }
    throw std::runtime_error("integrate_adaptive: failed to converge");
}

// int_0^b f(x) dx where f may have an integrable endpoint behavior at 0
// (x^{c-1} with Re c > 0, possibly times logs): substitute x = e^v and
// integrate v over [log(eps_cut), log b]. decay_rate is a lower bound on c.
template <typename F>
auto integrate_exp_substituted(F&& f, double b, double decay_rate,
                               double rel_tol) {
    if (decay_rate <= 0.0)
        throw std::domain_error("integrate_exp_substituted: needs Re c > 0");
    const double vmin = -45.0 / decay_rate;
    auto g = [&](double v) {
        const double x = std::exp(v);
        return f(x) * x;
    };
    const int panels = std::max(12, int((std::log(b) - vmin) / 2.0));
    using R = std::invoke_result_t<F, double>;
    R prev = gl_panels(g, vmin, std::log(b), panels);
    for (int n = 2 * panels;; n *= 2) {
        R cur = gl_panels(g, vmin, std::log(b), n);
        if (std::abs(cur - prev) <= rel_tol * std::abs(cur) + 1e-305) return cur;
        prev = cur;
        if (n > (1 << 18))
            throw std::runtime_error("integrate_exp_substituted: no convergence");
    }
}

// Euler transformation of a near-alternating sequence of terms; returns the
// accelerated sum of the whole series the terms begin.
template <typename T>
T euler_sum(std::vector<T> terms) {
    if (terms.empty()) return T{};
    std::vector<T> s(terms.size());
    T run{};
    for (std::size_t i = 0; i < terms.size(); ++i) {
        run += terms[i];
        s[i] = run;
    }
    while (s.size() > 1) {
        for (std::size_t i = 0; i + 1 < s.size(); ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
        s.pop_back();
    }
    return s[0];
}

// Conditionally convergent oscillatory tail: integrates f over consecutive
// half-period panels starting at x0 and Euler-accelerates the panel sums.
template <typename F>
auto oscillatory_tail(F&& f, double x0, double half_period, int num_panels,
                      int subpanels = 2) {
    using R = std::invoke_result_t<F, double>;
    std::vector<R> terms;
    terms.reserve(std::size_t(num_panels));
    for (int k = 0; k < num_panels; ++k) {
        const double a = x0 + k * half_period;
        terms.push_back(gl_panels(f, a, a + half_period, subpanels));
    }
    return euler_sum(std::move(terms));
}

} // namespace vlab::quad
