#pragma once

#include "shellpc/eigenfun.hpp"
#include "shellpc/geometry.hpp"

namespace shellpc::oracle {

/// Radial reduction of -Laplace on a shell for angular degree l (0: Laplace, 1: Stokes).
struct RadialProblem {
    ShellGeometry geom;
    int l = 0;
    int n_grid = 2000; // uniform intervals across the gap

    void validate() const;
};

/// Smallest Dirichlet eigenvalue of -(u'' + 2u'/r - l(l+1)u/r^2). With v = r u this is
/// -v'' + l(l+1) v / r^2 = lambda v; second-order differences give a symmetric
/// tridiagonal matrix whose lowest eigenvalue is isolated by Sturm-sequence bisection.
double radial_eigenvalue(const RadialProblem& problem);

/// Number of eigenvalues of the symmetric tridiagonal (diag, off) strictly below x.
int sturm_count(const double* diag, int n, double off, double x);

/// int (u'^2 r^2 + l(l+1) u^2) dr / int u^2 r^2 dr over the profile samples, which must be
/// equally spaced. Derivatives by centered differences (second-order one-sided at the ends),
/// integrals by the trapezoidal rule.
double rayleigh_quotient(const RadialProfile& profile, int l);

} // namespace shellpc::oracle
