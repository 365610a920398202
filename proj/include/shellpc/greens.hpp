#pragma once

#include <array>
#include <vector>

namespace shellpc {

using Point3 = std::array<double, 3>;

/// Image-series truncation and Nystrom discretization for the shell sigma <= |x| <= 1.
/// sigma = 0 selects the unit-ball kernel with no image series.
struct GreensParams {
    double sigma = 0.0;
    int truncation_K = 0;
    int radial_nodes = 128;
    double tail_tol = 1e-10;

    /// K = ceil(ln(tail_tol) / ln(sigma)) + 2, or 3 for 0 < sigma < 1e-3.
    static GreensParams for_sigma(double sigma, int radial_nodes = 128, double tail_tol = 1e-10);

    void validate() const;
};

/// Dirichlet Green's function of -Laplace on the unit ball.
double greens_ball(const Point3& x, const Point3& y);

/// Dirichlet Green's function of -Laplace on the shell: the ball kernel plus
/// four image terms per k = 1..K, each weighted by sigma^k / (4 pi).
double greens_shell(const Point3& x, const Point3& y, const GreensParams& params);

/// greens_shell written in terms of |x|, |y| and the cosine of the angle between them.
double greens_shell_reduced(double rx, double ry, double cos_angle, const GreensParams& params);

/// Sphere integral of greens_shell over the direction of y. Every term
/// 1 / sqrt(a^2 + b^2 - 2ab cos) integrates to 4 pi / max(a, b).
double radial_kernel(double r, double rho, const GreensParams& params);

struct InverseNormResult {
    double estimate = 0.0;
    int iterations = 0;
    std::vector<double> nodes;       // radial Gauss-Legendre nodes on [sigma, 1]
    std::vector<double> eigenvector; // leading radial eigenfunction at the nodes, max-normalized
};

/// Largest eigenvalue of g -> int K(r, rho) g(rho) rho^2 d rho on [sigma, 1], i.e. the
/// norm of the inverse Dirichlet Laplacian restricted to radial functions, by Nystrom
/// discretization and power iteration.
InverseNormResult inverse_norm_solve(const GreensParams& params);

double inverse_norm_estimate(const GreensParams& params);

} // namespace shellpc
