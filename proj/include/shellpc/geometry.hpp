#pragma once

namespace shellpc {

/// Which normalization a geometry carries: gap width 1 (A frame) or outer radius 1 (sigma frame).
enum class Frame { A, Sigma };

/// Spherical shell between two concentric spheres.
///
/// A = 2 R_i / (R_o - R_i) is the inverse relative gap width and
/// sigma = R_i / R_o = A / (A + 2) the radius ratio. A = 0 is the
/// punctured unit ball.
struct ShellGeometry {
    double A = 0.0;
    double sigma = 0.0;
    double R_inner = 0.0;
    double R_outer = 1.0;
    Frame frame = Frame::A;

    /// Exactly 1 in the A frame.
    double gap() const noexcept { return frame == Frame::A ? 1.0 : R_outer - R_inner; }
    double mid_radius() const noexcept { return 0.5 * (R_inner + R_outer); }

    /// Canonical A-frame shell: radii A/2 and 1 + A/2.
    static ShellGeometry from_A(double A);
    /// Canonical sigma-frame shell: radii sigma and 1.
    static ShellGeometry from_sigma(double sigma);
    /// Shell with the given radius ratio, rescaled into the A frame.
    static ShellGeometry from_radii(double R_inner, double R_outer);

    /// Same shell shape in the other normalization.
    ShellGeometry in_frame(Frame f) const;
};

double sigma_from_A(double A);
double A_from_sigma(double sigma);

} // namespace shellpc
