#include "shellpc/greens.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "shellpc/error.hpp"
#include "shellpc/kernels.hpp"
#include "shellpc/quadrature.hpp"

namespace shellpc {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int panel_order = 16;

double norm(const Point3& p) { return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]); }

double inv_dist(double a, double b, double c)
{
    // 1 / sqrt(a^2 + b^2 - 2ab c), clamped at zero against rounding.
    return 1.0 / std::sqrt(std::max(0.0, a * a + b * b - 2.0 * a * b * c));
}

double image_term(double rx, double ry, double c, double q)
{
    // q = sigma^(2k)
    return inv_dist(ry, q * rx, c) + inv_dist(q * ry, rx, c) - inv_dist(rx * ry, q, c) - inv_dist(q * rx * ry, 1.0, c);
}

double image_term_radial(double r, double rho, double q)
{
    return 1.0 / std::max(rho, q * r) + 1.0 / std::max(q * rho, r) - 1.0 / std::max(r * rho, q)
         - 1.0 / std::max(q * r * rho, 1.0);
}

void check_tail(double last_term, const GreensParams& p)
{
    if (std::abs(last_term) > p.tail_tol) {
        std::ostringstream msg;
        msg << "image series term K=" << p.truncation_K << " is " << last_term << " > tail_tol " << p.tail_tol;
        throw Error(ErrorCode::TruncationInsufficient, msg.str());
    }
}

} // namespace

GreensParams GreensParams::for_sigma(double sigma, int radial_nodes, double tail_tol)
{
    GreensParams p;
    p.sigma = sigma;
    p.radial_nodes = radial_nodes;
    p.tail_tol = tail_tol;
    if (sigma == 0.0) {
        p.truncation_K = 0;
    } else if (sigma < 1e-3) {
        p.truncation_K = 3;
    } else {
        p.truncation_K = static_cast<int>(std::ceil(std::log(tail_tol) / std::log(sigma))) + 2;
    }
    p.validate();
    return p;
}

void GreensParams::validate() const
{
    const bool ok = sigma >= 0.0 && sigma < 1.0 && truncation_K >= 0 && (sigma == 0.0 || truncation_K >= 1)
                 && radial_nodes >= 1 && tail_tol > 0.0;
    if (!ok) {
        throw Error(ErrorCode::Domain, "invalid GreensParams");
    }
}

double greens_ball(const Point3& x, const Point3& y)
{
    const double rx = norm(x);
    const double ry = norm(y);
    if (rx > 1.0 + 1e-12 || ry > 1.0 + 1e-12) {
        throw Error(ErrorCode::Domain, "greens_ball: points must lie in the closed unit ball");
    }
    const Point3 d{x[0] - y[0], x[1] - y[1], x[2] - y[2]};
    const double dist = norm(d);
    if (dist == 0.0) {
        throw Error(ErrorCode::Singularity, "greens_ball: x == y");
    }
    const double dot = x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
    const double image = std::sqrt(std::max(0.0, rx * rx * ry * ry + 1.0 - 2.0 * dot));
    return (1.0 / dist - 1.0 / image) / (4.0 * pi);
}

double greens_shell_reduced(double rx, double ry, double c, const GreensParams& params)
{
    params.validate();
    const double d2 = rx * rx + ry * ry - 2.0 * rx * ry * c;
    if (d2 <= 0.0) {
        throw Error(ErrorCode::Singularity, "greens_shell: x == y");
    }
    double g = 1.0 / std::sqrt(d2) - inv_dist(rx * ry, 1.0, c);
    const double s2 = params.sigma * params.sigma;
    double sk = 1.0;
    double q = 1.0;
    double last = 0.0;
    for (int k = 1; k <= params.truncation_K; ++k) {
        sk *= params.sigma;
        q *= s2;
        last = sk * image_term(rx, ry, c, q);
        g += last;
    }
    if (params.truncation_K > 0) {
        check_tail(last / (4.0 * pi), params);
    }
    return g / (4.0 * pi);
}

double greens_shell(const Point3& x, const Point3& y, const GreensParams& params)
{
    const double rx = norm(x);
    const double ry = norm(y);
    const double lo = params.sigma * (1.0 - 1e-12);
    if (rx < lo || ry < lo || rx > 1.0 + 1e-12 || ry > 1.0 + 1e-12) {
        throw Error(ErrorCode::Domain, "greens_shell: points must lie in the closed shell");
    }
    if (rx == 0.0 || ry == 0.0) {
        return greens_ball(x, y); // sigma = 0 and a point at the center
    }
    const double c = std::clamp((x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) / (rx * ry), -1.0, 1.0);
    return greens_shell_reduced(rx, ry, c, params);
}

double radial_kernel(double r, double rho, const GreensParams& params)
{
    double k = 1.0 / std::max(r, rho) - 1.0;
    const double s2 = params.sigma * params.sigma;
    double sk = 1.0;
    double q = 1.0;
    double last = 0.0;
    for (int i = 1; i <= params.truncation_K; ++i) {
        sk *= params.sigma;
        q *= s2;
        last = sk * image_term_radial(r, rho, q);
        k += last;
    }
    if (params.truncation_K > 0) {
        check_tail(last, params);
    }
    return k;
}

InverseNormResult inverse_norm_solve(const GreensParams& params)
{
    params.validate();
    if (params.sigma > 0.9) {
        throw Error(ErrorCode::Domain, "inverse_norm_estimate: sigma must lie in [0, 0.9]");
    }
    if (params.radial_nodes < 64) {
        throw Error(ErrorCode::Domain, "inverse_norm_estimate: need at least 64 radial nodes");
    }
    const int panels = (params.radial_nodes + panel_order - 1) / panel_order;
    const quad::Rule rule = quad::composite_gauss_legendre(params.sigma, 1.0, panels, panel_order);
    const std::size_t n = rule.size();

    // Symmetrized Nystrom matrix s_i K(r_i, r_j) s_j with s_i = r_i sqrt(w_i).
    std::vector<double> scale(n);
    for (std::size_t i = 0; i < n; ++i) {
        scale[i] = rule.nodes[i] * std::sqrt(rule.weights[i]);
    }
    const std::vector<double> m = kernels::assemble_symmetric(
        rule.nodes, scale, [&](double r, double rho) { return radial_kernel(r, rho, params); });

    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> w(n);
    double q_prev = 0.0;
    InverseNormResult res;
    constexpr int max_iter = 10000;
    for (int it = 1;; ++it) {
        kernels::matvec(m, v, w);
        double q = 0.0;
        double w2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            q += v[i] * w[i];
            w2 += w[i] * w[i];
        }
        const double wn = std::sqrt(w2);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = w[i] / wn;
        }
        if (it > 1 && std::abs(q - q_prev) <= 1e-12) {
            res.estimate = q;
            res.iterations = it;
            break;
        }
        if (it >= max_iter) {
            throw Error(ErrorCode::NonConvergence, "power iteration did not settle in 1e4 steps");
        }
        q_prev = q;
    }

    res.nodes = rule.nodes;
    res.eigenvector.resize(n);
    double vmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        res.eigenvector[i] = v[i] / scale[i];
        if (std::abs(res.eigenvector[i]) > std::abs(vmax)) {
            vmax = res.eigenvector[i];
        }
    }
    for (double& e : res.eigenvector) {
        e /= vmax;
    }
    return res;
}

double inverse_norm_estimate(const GreensParams& params)
{
    return inverse_norm_solve(params).estimate;
}

} // namespace shellpc
