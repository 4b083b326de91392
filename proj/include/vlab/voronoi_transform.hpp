#pragma once

// The integral transforms on the dual side of the GL(2) and GL(3) summation
// formulas, evaluated by Mellin-Barnes contours with explicit residue
// bookkeeping. Construction precomputes everything t-independent, so a
// transform can be evaluated at many arguments cheaply.

#include "vlab/test_function.hpp"

#include <array>
#include <limits>
#include <string>
#include <vector>

namespace vlab::mellin {

struct Gl2Params {
    Cplx nu;
    int parity = 0;  // eta of the underlying form; recorded, not used by F
};

struct Gl3Params {
    std::array<Cplx, 3> lambda;
    std::array<int, 3> delta;
};

// Requires sum_j Re lambda_j = 0.
Gl3Params make_gl3_params(std::array<Cplx, 3> lambda, std::array<int, 3> delta);

// Contour request for the transform; NaN / 0 fields are chosen
// automatically (sigma in a balanced pole-free window, height from the
// integrand decay).
struct TransformContour {
    double sigma = std::numeric_limits<double>::quiet_NaN();
    double height = 0.0;
    double node_step = 0.0;
    double pole_margin = 0.05;
};

// F(t) = int_{R^r} f(x_1...x_r / t) prod_j e^{-2 pi i x_j} |x_j|^{-lambda_j}
//        (sgn x_j)^{delta_j} dx   (GL(2): lambda = (-nu, nu), delta = (0,0))
//
// computed, after sign-splitting f and Mellin inversion, as
//
//   F(t) = sum_{eps=0,1} (sgn t)^eps (1/2 pi i) int_{(sigma)} M_eps(s) |t|^s
//          prod_j G_{(eps+delta_j) mod 2}(1 - s - lambda_j) ds,
//
// where G_p is gamma_ratio_kernel(., p) and M_eps the sign-split Mellin
// transform of f. The inversion is legitimate with every pole of every
// G-factor to the right of the contour; for a contour placed further right
// (better conditioned numerically), the poles it passed contribute explicit
// residues, which construction subtracts.
class VoronoiKernelTransform {
public:
    VoronoiKernelTransform(const TestFunction& f, const Gl2Params& params,
                           TransformContour contour = {});
    VoronoiKernelTransform(const TestFunction& f, const Gl3Params& params,
                           TransformContour contour = {});

    // Complex in general: for odd test-function components an odd number of
    // sign-weighted factors makes the epsilon = 1 part imaginary.
    Cplx operator()(double t) const;

    // Asserts |Im| < 1e-9 (always holds at rank 2 with real data).
    double real_value(double t) const;

    struct PartDiagnostics {
        bool active = false;
        double sigma = 0.0;
        double height = 0.0;
        std::size_t nodes = 0;
        std::vector<double> residues_crossed;  // pole positions left of sigma
    };
    const std::array<PartDiagnostics, 2>& diagnostics() const { return diag_; }

private:
    void build(const TestFunction& f, const std::vector<Cplx>& lambda,
               const std::vector<int>& delta, const TransformContour& contour);

    struct Part {
        // F_eps(t) = sum_k coeff_k exp(exponent_k log|t|)
        std::vector<Cplx> exponents;
        std::vector<Cplx> coeffs;
    };
    std::array<Part, 2> parts_;
    std::array<PartDiagnostics, 2> diag_;
};

// One-shot wrappers matching the library's operation map. gl2_transform is
// real-valued; gl3_transform is complex (its imaginary part cancels only
// after the two signs of the summation index are combined).
double gl2_transform(const TestFunction& f, const Gl2Params& params, double t);
Cplx gl3_transform(const TestFunction& f, const Gl3Params& params, double t);

} // namespace vlab::mellin
