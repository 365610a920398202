#pragma once

#include <array>
#include <vector>

#include "shellpc/geometry.hpp"
#include "shellpc/spectra.hpp"

namespace shellpc {

/// How the radial factor is evaluated. BesselRatio is J_nu(kr) - ratio J_{-nu}(kr) with
/// ratio = J_nu(k R_i) / J_{-nu}(k R_i); BoundaryAnchored multiplies that through by
/// J_{-nu}(k R_i) and is used where the denominator vanishes.
enum class Representation { BesselRatio, BoundaryAnchored };

/// First radial eigenfunction factor of the Laplace (l = 0) or Stokes (l = 1) operator,
/// L2-normalized over the shell including the angular factor, positive at mid-gap.
///
/// Laplace: u(r) = c r^{-1/2} (J_{1/2}(k r) - ratio J_{-1/2}(k r)), k = pi / gap,
/// which reduces to c' sin(k (r - R_i)) / r.
/// Stokes:  f(r) = c r^{-1/2} (J_{3/2}(k r) - ratio J_{-3/2}(k r)), paired with a
/// degree-one angular field of squared sphere norm 8 pi / 3.
class RadialMode {
  public:
    RadialMode(const ShellGeometry& geom, Operator op, int nodes_per_unit = 64);

    double operator()(double r) const { return norm_ * shape(r); }

    const ShellGeometry& geometry() const noexcept { return geom_; }
    Operator op() const noexcept { return op_; }
    double kappa() const noexcept { return kappa_; }
    double norm_constant() const noexcept { return norm_; }
    double angular_factor() const noexcept;
    Representation representation() const noexcept { return repr_; }

    /// The unnormalized radial factor.
    double shape(double r) const;

  private:
    ShellGeometry geom_;
    Operator op_;
    double kappa_ = 0.0;
    double ratio_ = 0.0;
    double anchor_ = 0.0; // J_{-nu}(k R_i) for the anchored form
    Representation repr_ = Representation::BesselRatio;
    double norm_ = 1.0;
};

/// Squared weighted L2 norm: angular_factor * int f(r)^2 r^2 dr by composite Gauss-Legendre.
double weighted_norm_squared(const RadialMode& mode, int nodes_per_unit);

struct ProfileSample {
    double r;
    double value;
};

struct RadialProfile {
    ShellGeometry geom;
    Operator op = Operator::Laplace;
    std::vector<ProfileSample> samples;
    double norm_constant = 1.0;
};

/// `n_samples` equally spaced samples of a callable over [R_inner, R_outer].
RadialProfile sample_profile(const RadialMode& mode, int n_samples);

RadialProfile laplace_profile(const ShellGeometry& geom, int n_samples);
RadialProfile stokes_profile(const ShellGeometry& geom, int n_samples);

/// c sin(pi s), s = (r - R_i) / gap, normalized the same way as the exact mode.
RadialProfile small_gap_profile(const ShellGeometry& geom, Operator op, int n_samples);

/// sup over the gap of |v(s) / v(1/2) - sin(pi s)| with v = r f(r) the exact mode
/// with its geometric 1/r factor removed.
double small_gap_deviation(const ShellGeometry& geom, Operator op, int n_probe = 2001);

/// sin(k s) + (sin(k s) - k s cos(k s)) / (k^2 (R + s) R): the Stokes radial factor
/// times r, up to a constant, in gap coordinates r = R + s.
double stokes_gap_factor(double s, double kappa, double R);

/// Degree-one surface field w_alpha, alpha in {-1, 0, 1}, in the (e_r, e_theta, e_phi) basis.
struct AngularMode {
    int alpha = 0;
    double angular_l2 = 0.0; // int over the unit sphere of |w_alpha|^2

    std::array<double, 3> operator()(double theta, double phi) const;
};

AngularMode angular_mode(int alpha);

/// Sphere L2 inner product of two angular modes by tensor Gauss-Legendre x trapezoid quadrature.
double angular_inner_product(int alpha, int beta, int n_theta = 32, int n_phi = 64);

} // namespace shellpc
