#include "shellpc/eigenfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "shellpc/error.hpp"
#include "shellpc/quadrature.hpp"
#include "shellpc/specfun.hpp"

namespace shellpc {

namespace {

constexpr double pi = std::numbers::pi;

// |J_{-nu}(t)| / sqrt(2 / (pi t)) below this counts as a vanishing denominator.
constexpr double degenerate_tol = 1e-6;

double angular_factor_for(Operator op)
{
    return op == Operator::Laplace ? 4.0 * pi : 8.0 * pi / 3.0;
}

double norm_squared(const ShellGeometry& g, Operator op, int nodes_per_unit, auto&& f)
{
    const quad::Rule rule = quad::composite_by_density(g.R_inner, g.R_outer, nodes_per_unit);
    const double radial = rule.integrate([&](double r) {
        const double v = f(r);
        return v * v * r * r;
    });
    return angular_factor_for(op) * radial;
}

} // namespace

RadialMode::RadialMode(const ShellGeometry& geom, Operator op, int nodes_per_unit)
    : geom_(geom), op_(op)
{
    if (op == Operator::Laplace) {
        kappa_ = laplace_first(geom).kappa;
    } else {
        kappa_ = stokes_first(geom).kappa;
    }

    const double t = kappa_ * geom.R_inner;
    if (t > 0.0) {
        if (op == Operator::Laplace) {
            if (std::abs(std::cos(t)) < degenerate_tol) {
                repr_ = Representation::BoundaryAnchored;
                anchor_ = specfun::bessel_neg_half(t);
            } else {
                ratio_ = specfun::bessel_half(t) / specfun::bessel_neg_half(t);
            }
        } else {
            if (std::abs(std::sin(t) + std::cos(t) / t) < degenerate_tol) {
                repr_ = Representation::BoundaryAnchored;
                anchor_ = specfun::bessel_neg_three_half(t);
            } else {
                ratio_ = specfun::bessel_three_half(t) / specfun::bessel_neg_three_half(t);
            }
        }
    }

    const double n2 = norm_squared(geom_, op_, nodes_per_unit, [this](double r) { return shape(r); });
    if (!(n2 > 0.0) || !std::isfinite(n2)) {
        throw Error(ErrorCode::NormalizationSingular, "radial mode has no finite positive norm");
    }
    norm_ = 1.0 / std::sqrt(n2);
    if (shape(geom_.mid_radius()) < 0.0) {
        norm_ = -norm_;
    }
}

double RadialMode::angular_factor() const noexcept { return angular_factor_for(op_); }

double RadialMode::shape(double r) const
{
    const double k = kappa_;
    if (r == 0.0) {
        // Only reachable for the punctured ball: J_{1/2}(kr)/sqrt(r) -> sqrt(2k/pi), J_{3/2}(kr)/sqrt(r) -> 0.
        return op_ == Operator::Laplace ? std::sqrt(2.0 * k / pi) : 0.0;
    }
    const double x = k * r;
    const double inv_sqrt_r = 1.0 / std::sqrt(r);
    if (op_ == Operator::Laplace) {
        if (repr_ == Representation::BoundaryAnchored) {
            const double t = k * geom_.R_inner;
            return inv_sqrt_r * (specfun::bessel_half(x) * anchor_ - specfun::bessel_half(t) * specfun::bessel_neg_half(x));
        }
        if (ratio_ == 0.0) {
            return inv_sqrt_r * specfun::bessel_half(x);
        }
        return inv_sqrt_r * (specfun::bessel_half(x) - ratio_ * specfun::bessel_neg_half(x));
    }
    if (repr_ == Representation::BoundaryAnchored) {
        const double t = k * geom_.R_inner;
        return inv_sqrt_r
             * (specfun::bessel_three_half(x) * anchor_ - specfun::bessel_three_half(t) * specfun::bessel_neg_three_half(x));
    }
    if (ratio_ == 0.0) {
        return inv_sqrt_r * specfun::bessel_three_half(x);
    }
    return inv_sqrt_r * (specfun::bessel_three_half(x) - ratio_ * specfun::bessel_neg_three_half(x));
}

double weighted_norm_squared(const RadialMode& mode, int nodes_per_unit)
{
    return norm_squared(mode.geometry(), mode.op(), nodes_per_unit, [&](double r) { return mode(r); });
}

RadialProfile sample_profile(const RadialMode& mode, int n_samples)
{
    if (n_samples < 2) {
        throw Error(ErrorCode::Domain, "a profile needs at least two samples");
    }
    const ShellGeometry& g = mode.geometry();
    RadialProfile p;
    p.geom = g;
    p.op = mode.op();
    p.norm_constant = mode.norm_constant();
    p.samples.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const double r = i + 1 == n_samples ? g.R_outer
                                            : g.R_inner + g.gap() * static_cast<double>(i) / (n_samples - 1);
        p.samples.push_back({r, mode(r)});
    }
    return p;
}

RadialProfile laplace_profile(const ShellGeometry& geom, int n_samples)
{
    return sample_profile(RadialMode(geom, Operator::Laplace), n_samples);
}

RadialProfile stokes_profile(const ShellGeometry& geom, int n_samples)
{
    return sample_profile(RadialMode(geom, Operator::Stokes), n_samples);
}

RadialProfile small_gap_profile(const ShellGeometry& geom, Operator op, int n_samples)
{
    if (n_samples < 2) {
        throw Error(ErrorCode::Domain, "a profile needs at least two samples");
    }
    const double k = pi / geom.gap();
    auto shape = [&](double r) { return std::sin(k * (r - geom.R_inner)); };
    const double c = 1.0 / std::sqrt(norm_squared(geom, op, 64, shape));

    RadialProfile p;
    p.geom = geom;
    p.op = op;
    p.norm_constant = c;
    p.samples.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) {
        const double r = i + 1 == n_samples ? geom.R_outer
                                            : geom.R_inner + geom.gap() * static_cast<double>(i) / (n_samples - 1);
        p.samples.push_back({r, c * shape(r)});
    }
    return p;
}

double small_gap_deviation(const ShellGeometry& geom, Operator op, int n_probe)
{
    const RadialMode mode(geom, op);
    const double mid = geom.mid_radius();
    const double v_mid = mid * mode(mid);
    double dev = 0.0;
    for (int i = 0; i < n_probe; ++i) {
        const double s = static_cast<double>(i) / (n_probe - 1);
        const double r = geom.R_inner + s * geom.gap();
        dev = std::max(dev, std::abs(r * mode(r) / v_mid - std::sin(pi * s)));
    }
    return dev;
}

double stokes_gap_factor(double s, double kappa, double R)
{
    const double ks = kappa * s;
    return std::sin(ks) + (std::sin(ks) - ks * std::cos(ks)) / (kappa * kappa * (R + s) * R);
}

std::array<double, 3> AngularMode::operator()(double theta, double phi) const
{
    switch (alpha) {
    case 0: return {0.0, 0.0, std::sin(theta)};
    case -1: return {0.0, std::cos(phi), -std::sin(phi) * std::cos(theta)};
    default: return {0.0, std::sin(phi), std::cos(phi) * std::cos(theta)};
    }
}

AngularMode angular_mode(int alpha)
{
    if (alpha < -1 || alpha > 1) {
        throw Error(ErrorCode::Domain, "angular mode index must be -1, 0 or 1");
    }
    AngularMode m;
    m.alpha = alpha;
    m.angular_l2 = angular_inner_product(alpha, alpha);
    return m;
}

double angular_inner_product(int alpha, int beta, int n_theta, int n_phi)
{
    if (alpha < -1 || alpha > 1 || beta < -1 || beta > 1) {
        throw Error(ErrorCode::Domain, "angular mode index must be -1, 0 or 1");
    }
    const AngularMode a{alpha, 0.0};
    const AngularMode b{beta, 0.0};
    const quad::Rule ct = quad::gauss_legendre(n_theta); // nodes in cos(theta)
    const double dphi = 2.0 * pi / n_phi;
    double sum = 0.0;
    for (std::size_t i = 0; i < ct.size(); ++i) {
        const double theta = std::acos(ct.nodes[i]);
        for (int j = 0; j < n_phi; ++j) {
            const double phi = j * dphi;
            const auto u = a(theta, phi);
            const auto v = b(theta, phi);
            sum += ct.weights[i] * dphi * (u[0] * v[0] + u[1] * v[1] + u[2] * v[2]);
        }
    }
    return sum;
}

} // namespace shellpc
