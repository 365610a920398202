#include "shellpc/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "shellpc/error.hpp"

namespace shellpc::specfun {

namespace {

constexpr double pi = std::numbers::pi;

void require_positive(double t, const char* who)
{
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw Error(ErrorCode::Domain, std::string(who) + ": argument must be positive and finite");
    }
}

double prefactor(double t) { return std::sqrt(2.0 / (pi * t)); }

// sin(pi u), exactly zero at integer u.
double sin_pi(double u)
{
    double r = std::remainder(u, 2.0); // in [-1, 1]
    if (r > 0.5) {
        r = 1.0 - r;
    } else if (r < -0.5) {
        r = -1.0 - r;
    }
    return r == 0.0 ? 0.0 : std::sin(pi * r);
}

// sin t / t - cos t = sum_{k>=1} (-1)^{k+1} 2k t^{2k} / (2k+1)!
double three_half_series(double t)
{
    const double t2 = t * t;
    double term = t2 / 3.0; // k = 1
    double sum = term;
    for (int k = 2; k <= 10; ++k) {
        // term_k / term_{k-1} = -t^2 k / ((k-1) 2k (2k+1))
        term *= -t2 * static_cast<double>(k) / (static_cast<double>(k - 1) * (2 * k) * (2 * k + 1));
        sum += term;
    }
    return sum;
}

} // namespace

double bessel_half(double t)
{
    require_positive(t, "bessel_half");
    return prefactor(t) * std::sin(t);
}

double bessel_neg_half(double t)
{
    require_positive(t, "bessel_neg_half");
    return prefactor(t) * std::cos(t);
}

double bessel_three_half(double t)
{
    require_positive(t, "bessel_three_half");
    if (t < series_switch) {
        return prefactor(t) * three_half_series(t);
    }
    return prefactor(t) * (std::sin(t) / t - std::cos(t));
}

double bessel_neg_three_half(double t)
{
    require_positive(t, "bessel_neg_three_half");
    return -prefactor(t) * (std::sin(t) + std::cos(t) / t);
}

double half_order_cross(double x, double y)
{
    return bessel_half(x) * bessel_neg_half(y) - bessel_half(y) * bessel_neg_half(x);
}

double three_half_order_cross(double x, double y)
{
    return bessel_three_half(x) * bessel_neg_three_half(y)
         - bessel_three_half(y) * bessel_neg_three_half(x);
}

double laplace_eigencondition(double kappa, const ShellGeometry& geom)
{
    require_positive(kappa, "laplace_eigencondition");
    const double s = sin_pi(kappa / pi * geom.gap());
    if (geom.R_inner == 0.0) {
        return prefactor(kappa * geom.R_outer) * s;
    }
    return 2.0 / (pi * kappa * std::sqrt(geom.R_inner * geom.R_outer)) * s;
}

double laplace_eigencondition_cross(double kappa, const ShellGeometry& geom)
{
    require_positive(kappa, "laplace_eigencondition_cross");
    if (!(kappa * geom.R_inner > 0.0)) {
        throw Error(ErrorCode::Domain, "laplace_eigencondition_cross: kappa * R_inner must be positive");
    }
    return half_order_cross(kappa * geom.R_outer, kappa * geom.R_inner);
}

double stokes_eigencondition(double kappa, const ShellGeometry& geom)
{
    require_positive(kappa, "stokes_eigencondition");
    if (!(geom.R_inner > 0.0)) {
        throw Error(ErrorCode::Domain, "stokes_eigencondition: R_inner must be positive");
    }
    const double ab = kappa * kappa * geom.R_inner * geom.R_outer;
    const double kg = kappa * geom.gap();
    return kg / ab * std::cos(kg) - (1.0 + 1.0 / ab) * std::sin(kg);
}

double stokes_eigencondition_cross(double kappa, const ShellGeometry& geom)
{
    require_positive(kappa, "stokes_eigencondition_cross");
    const double inner = kappa * geom.R_inner;
    if (!(inner >= series_switch)) {
        throw Error(ErrorCode::LossOfPrecision,
                    "stokes_eigencondition_cross: kappa * R_inner below series switch");
    }
    return three_half_order_cross(kappa * geom.R_outer, inner);
}

double stokes_trig_prefactor(double kappa, const ShellGeometry& geom)
{
    require_positive(kappa, "stokes_trig_prefactor");
    return 2.0 / (pi * kappa * std::sqrt(geom.R_inner * geom.R_outer));
}

double stokes_ball_eigencondition(double kappa)
{
    return kappa * std::cos(kappa) - std::sin(kappa);
}

} // namespace shellpc::specfun
