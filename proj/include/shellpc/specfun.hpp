#pragma once

#include "shellpc/geometry.hpp"

namespace shellpc::specfun {

/// Below this argument J_{3/2} is summed from its ascending series.
inline constexpr double series_switch = 0.1;

enum class EigenconditionKind { LaplaceCross, StokesCross, StokesTrig };

/// J_{1/2}(t) = sqrt(2/(pi t)) sin t, t > 0.
double bessel_half(double t);
/// J_{-1/2}(t) = sqrt(2/(pi t)) cos t, t > 0.
double bessel_neg_half(double t);
/// J_{3/2}(t) = sqrt(2/(pi t)) (sin t / t - cos t), t > 0.
double bessel_three_half(double t);
/// J_{-3/2}(t) = -sqrt(2/(pi t)) (sin t + cos t / t), t > 0.
double bessel_neg_three_half(double t);

/// J_{1/2}(x) J_{-1/2}(y) - J_{1/2}(y) J_{-1/2}(x). Antisymmetric in (x, y).
double half_order_cross(double x, double y);
/// J_{3/2}(x) J_{-3/2}(y) - J_{3/2}(y) J_{-3/2}(x). Antisymmetric in (x, y).
double three_half_order_cross(double x, double y);

// Laplace eigencondition for the shell `geom`, in the frame the geometry carries.
// The cross form needs R_inner > 0; the closed form
// (2 / (pi kappa sqrt(R_i R_o))) sin(kappa (R_o - R_i)) is defined for all kappa > 0
// and, for R_inner = 0, returns the limit value sqrt(2/(pi kappa R_o)) sin(kappa R_o)
// without the diverging J_{-1/2}(0) factor.
double laplace_eigencondition(double kappa, const ShellGeometry& geom);
double laplace_eigencondition_cross(double kappa, const ShellGeometry& geom);

/// Stokes eigencondition without its positive prefactor 2 / (pi kappa sqrt(R_i R_o)):
///
///   F = (R_o - R_i) kappa / (kappa^2 R_i R_o) cos(kappa gap)
///       - (1 + 1 / (kappa^2 R_i R_o)) sin(kappa gap)
///
/// In the A frame this is -(1 + 1/(k^2 R(1+R))) sin k + cos k / (k R (1+R)), R = A/2.
/// Requires R_inner > 0.
double stokes_eigencondition(double kappa, const ShellGeometry& geom);

/// The Bessel cross product J_{3/2}(k R_o) J_{-3/2}(k R_i) - J_{3/2}(k R_i) J_{-3/2}(k R_o).
/// Throws LossOfPrecision when kappa R_inner < series_switch.
double stokes_eigencondition_cross(double kappa, const ShellGeometry& geom);

/// The positive factor relating the two Stokes forms: cross = prefactor * trig.
double stokes_trig_prefactor(double kappa, const ShellGeometry& geom);

/// kappa cos kappa - sin kappa: the Stokes condition at A = 0 (roots solve tan x = x).
double stokes_ball_eigencondition(double kappa);

} // namespace shellpc::specfun
