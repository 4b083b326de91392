#include "vlab/voronoi_transform.hpp"

#include "vlab/mellin.hpp"
#include "vlab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace vlab::mellin {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct PoleFamily {
    int factor;      // which G-factor
    double start;    // real part of the first pole
    double im;       // imaginary part (nonzero for complex lambda)
};

// Poles of G_p(1 - s - lambda) sit at s = 1 - lambda + p + 2k, k >= 0.
std::vector<PoleFamily> pole_families(const std::vector<Cplx>& lambda,
                                      const std::vector<int>& parities) {
    std::vector<PoleFamily> out;
    for (std::size_t j = 0; j < lambda.size(); ++j)
        out.push_back({int(j), 1.0 - lambda[j].real() + parities[j],
                       -lambda[j].imag()});
    return out;
}

std::vector<double> poles_below(const std::vector<PoleFamily>& fams, double sigma) {
    std::vector<double> ps;
    for (const auto& f : fams)
        for (double p = f.start; p < sigma; p += 2.0) ps.push_back(p);
    std::sort(ps.begin(), ps.end());
    return ps;
}

double nearest_pole_distance(const std::vector<PoleFamily>& fams, double sigma) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& f : fams) {
        if (sigma < f.start) {
            d = std::min(d, f.start - sigma);
            continue;
        }
        const double k = std::round((sigma - f.start) / 2.0);
        for (double kk : {k - 1.0, k, k + 1.0}) {
            if (kk < 0) continue;
            d = std::min(d, std::fabs(sigma - (f.start + 2.0 * kk)));
        }
    }
    return d;
}

// Balanced abscissa: the line where the product of kernel factors neither
// grows nor decays polynomially, nudged into the middle of a pole-free
// window when it lands too close to a pole family.
double choose_sigma(const std::vector<PoleFamily>& fams, double lambda_re_sum,
                    std::size_t rank) {
    const double balanced = 0.5 - lambda_re_sum / double(rank);
    if (nearest_pole_distance(fams, balanced) >= 0.3) return balanced;
    // collect pole positions near the balanced line and take the widest
    // nearby gap's midpoint
    std::vector<double> ps;
    for (const auto& f : fams)
        for (double p = f.start; p < balanced + 8.0; p += 2.0)
            if (p > balanced - 8.0) ps.push_back(p);
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end(),
                         [](double a, double b) { return std::fabs(a - b) < 1e-9; }),
             ps.end());
    double best = balanced - 8.0, best_score = 1e300;
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
        const double gap = ps[i + 1] - ps[i];
        if (gap < 0.6) continue;
        const double mid = 0.5 * (ps[i] + ps[i + 1]);
        const double score = std::fabs(mid - balanced);
        if (score < best_score) {
            best_score = score;
            best = mid;
        }
    }
    if (!ps.empty()) {
        const double below = ps.front() - 1.0;  // window left of everything
        if (std::fabs(below - balanced) < best_score) best = below;
    }
    return best;
}

} // namespace

Gl3Params make_gl3_params(std::array<Cplx, 3> lambda, std::array<int, 3> delta) {
    const double re_sum = lambda[0].real() + lambda[1].real() + lambda[2].real();
    if (std::fabs(re_sum) > 1e-12)
        throw std::domain_error("gl3 parameters need sum Re lambda = 0");
    for (int d : delta)
        if (d != 0 && d != 1) throw std::domain_error("gl3 delta components are 0/1");
    return Gl3Params{lambda, delta};
}

VoronoiKernelTransform::VoronoiKernelTransform(const TestFunction& f,
                                               const Gl2Params& params,
                                               TransformContour contour) {
    build(f, {-params.nu, params.nu}, {0, 0}, contour);
}

VoronoiKernelTransform::VoronoiKernelTransform(const TestFunction& f,
                                               const Gl3Params& params,
                                               TransformContour contour) {
    build(f, {params.lambda[0], params.lambda[1], params.lambda[2]},
          {params.delta[0], params.delta[1], params.delta[2]}, contour);
}

void VoronoiKernelTransform::build(const TestFunction& f,
                                   const std::vector<Cplx>& lambda,
                                   const std::vector<int>& delta,
                                   const TransformContour& contour) {
    const std::size_t rank = lambda.size();
    double lambda_re_sum = 0.0;
    for (const Cplx& l : lambda) lambda_re_sum += l.real();

    for (int eps = 0; eps < 2; ++eps) {
        if (f.is_even() && eps == 1) continue;  // M_1 vanishes

        std::vector<int> parities(rank);
        for (std::size_t j = 0; j < rank; ++j) parities[j] = (eps + delta[j]) % 2;
        const auto fams = pole_families(lambda, parities);

        const double sigma = std::isnan(contour.sigma)
                                 ? choose_sigma(fams, lambda_re_sum, rank)
                                 : contour.sigma;
        const double pole_dist = nearest_pole_distance(fams, sigma);
        if (pole_dist < contour.pole_margin)
            throw std::domain_error(
                "voronoi transform: contour-pole collision at sigma = " +
                std::to_string(sigma));

        auto mellin = [&](Cplx s) { return f.mellin_signed_contour(s, eps); };
        auto kernel_product = [&](Cplx s) {
            Cplx g = 1.0;
            for (std::size_t j = 0; j < rank; ++j)
                g *= gamma_ratio_kernel(1.0 - s - lambda[j], parities[j]);
            return g;
        };
        auto integrand = [&](double tau) {
            const Cplx s(sigma, tau);
            return mellin(s) * kernel_product(s);
        };

        // Height: walk outward until the integrand is 17 e-folds below its
        // running peak.
        double height = contour.height;
        if (height <= 0.0) {
            double peak = std::abs(integrand(0.0));
            height = 10.0;
            for (;; height += 5.0) {
                const double mag = std::abs(integrand(height));
                peak = std::max(peak, mag);
                if (mag < 1e-17 * peak || height >= 150.0) break;
            }
            height += 5.0;
        }

        // Trapezoid step from the analyticity strip (nearest pole distance).
        double h = contour.node_step;
        if (h <= 0.0) h = std::min(0.05, kTwoPi * std::min(pole_dist, 1.0) / 43.0);
        const std::size_t n = std::size_t(2.0 * height / h) + 1;

        Part part;
        part.exponents.reserve(n + 8);
        part.coeffs.reserve(n + 8);
        const std::vector<Cplx> node_vals = parallel_map<Cplx>(
            n, 1, [&](std::size_t k) { return integrand(-height + double(k) * h); });
        for (std::size_t k = 0; k < n; ++k) {
            const double tau = -height + double(k) * h;
            const double w = (k == 0 || k + 1 == n) ? 0.5 : 1.0;
            part.exponents.push_back(Cplx(sigma, tau));
            part.coeffs.push_back(node_vals[k] * (w * h / kTwoPi));
        }

        // Residues of poles the contour has passed. With the canonical
        // contour left of every pole, moving it right to sigma subtracts
        // 2 pi i times each enclosed residue:
        //   F_eps = (line at sigma) - sum Res_{s=p} [M(s) |t|^s prod G].
        // At a simple pole of factor J (argument w = 1 - s - lambda_J,
        // dw/ds = -1) the residue in s is minus the residue of G in w.
        auto& dg = diag_[std::size_t(eps)];
        for (double p : poles_below(fams, sigma)) {
            int owner = -1;
            for (const auto& fam : fams) {
                const double k = (p - fam.start) / 2.0;
                if (k > -1e-9 && std::fabs(k - std::round(k)) < 1e-9) {
                    if (owner >= 0)
                        throw std::domain_error(
                            "voronoi transform: double pole left of the contour; "
                            "choose a different sigma");
                    owner = fam.factor;
                }
            }
            const int k = int(std::round((p - fams[std::size_t(owner)].start) / 2.0));
            const Cplx res_g = gamma_ratio_residue(parities[std::size_t(owner)], k);
            Cplx rest = mellin(Cplx(p, 0.0));
            for (std::size_t j = 0; j < rank; ++j) {
                if (int(j) == owner) continue;
                rest *= gamma_ratio_kernel(1.0 - Cplx(p, 0.0) - lambda[j], parities[j]);
            }
            // F -= Res_s = -(res_g * rest)  =>  coefficient +res_g * rest
            part.exponents.push_back(Cplx(p, 0.0));
            part.coeffs.push_back(res_g * rest);
            dg.residues_crossed.push_back(p);
        }

        dg.active = true;
        dg.sigma = sigma;
        dg.height = height;
        dg.nodes = n;
        parts_[std::size_t(eps)] = std::move(part);
    }
}

Cplx VoronoiKernelTransform::operator()(double t) const {
    if (t == 0.0) throw std::domain_error("voronoi transform: t must be nonzero");
    const double lt = std::log(std::fabs(t));
    Cplx val = 0.0;
    for (int eps = 0; eps < 2; ++eps) {
        const Part& part = parts_[std::size_t(eps)];
        if (part.exponents.empty()) continue;
        std::vector<Cplx> terms(part.exponents.size());
        for (std::size_t k = 0; k < terms.size(); ++k)
            terms[k] = part.coeffs[k] * std::exp(part.exponents[k] * lt);
        const Cplx part_val = pairwise_sum(terms);
        val += (eps == 1 && t < 0.0) ? -part_val : part_val;
    }
    return val;
}

double VoronoiKernelTransform::real_value(double t) const {
    const Cplx v = (*this)(t);
    if (std::fabs(v.imag()) > 1e-9 * std::max(1.0, std::fabs(v.real())))
        throw std::runtime_error("voronoi transform: imaginary part failed to cancel");
    return v.real();
}

double gl2_transform(const TestFunction& f, const Gl2Params& params, double t) {
    return VoronoiKernelTransform(f, params).real_value(t);
}

Cplx gl3_transform(const TestFunction& f, const Gl3Params& params, double t) {
    return VoronoiKernelTransform(f, params)(t);
}

} // namespace vlab::mellin
