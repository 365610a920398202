#include "shellpc/geometry.hpp"

#include <cmath>
#include <string>

#include "shellpc/error.hpp"

namespace shellpc {

namespace {

void require(bool ok, const std::string& msg)
{
    if (!ok) {
        throw Error(ErrorCode::InvalidGeometry, msg);
    }
}

} // namespace

double sigma_from_A(double A)
{
    require(std::isfinite(A) && A >= 0.0, "A must be finite and nonnegative");
    return A / (A + 2.0);
}

double A_from_sigma(double sigma)
{
    require(std::isfinite(sigma) && sigma >= 0.0 && sigma < 1.0, "sigma must lie in [0, 1)");
    return 2.0 * sigma / (1.0 - sigma);
}

ShellGeometry ShellGeometry::from_A(double A)
{
    ShellGeometry g;
    g.sigma = sigma_from_A(A);
    g.A = A;
    g.R_inner = 0.5 * A;
    g.R_outer = 1.0 + 0.5 * A;
    g.frame = Frame::A;
    return g;
}

ShellGeometry ShellGeometry::from_sigma(double sigma)
{
    ShellGeometry g;
    g.A = A_from_sigma(sigma);
    g.sigma = sigma;
    g.R_inner = sigma;
    g.R_outer = 1.0;
    g.frame = Frame::Sigma;
    return g;
}

ShellGeometry ShellGeometry::from_radii(double R_inner, double R_outer)
{
    require(std::isfinite(R_inner) && std::isfinite(R_outer), "radii must be finite");
    require(R_inner >= 0.0, "inner radius must be nonnegative");
    require(R_inner < R_outer, "inner radius must be below outer radius");
    return from_A(2.0 * R_inner / (R_outer - R_inner));
}

ShellGeometry ShellGeometry::in_frame(Frame f) const
{
    return f == Frame::A ? from_A(A) : from_sigma(sigma);
}

} // namespace shellpc
