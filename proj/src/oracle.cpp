#include "shellpc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "shellpc/error.hpp"

namespace shellpc::oracle {

void RadialProblem::validate() const
{
    if (l != 0 && l != 1) {
        throw Error(ErrorCode::Domain, "radial problem supports l = 0 or l = 1");
    }
    if (n_grid < 64) {
        throw Error(ErrorCode::Domain, "radial problem needs n_grid >= 64");
    }
    if (n_grid > 1'000'000) {
        throw Error(ErrorCode::IllConditioned, "n_grid beyond 1e6 exhausts double precision in h^-2");
    }
    if (!(geom.gap() > 0.0) || geom.R_inner < 0.0) {
        throw Error(ErrorCode::InvalidGeometry, "radial problem needs a nondegenerate shell");
    }
}

int sturm_count(const double* diag, int n, double off, double x)
{
    const double off2 = off * off;
    int count = 0;
    double q = diag[0] - x;
    for (int i = 0;;) {
        if (q < 0.0) {
            ++count;
        }
        if (++i == n) {
            break;
        }
        if (q == 0.0) {
            q = std::abs(off) * 1e-300; // standard perturbation of a zero pivot
        }
        q = diag[i] - x - off2 / q;
    }
    return count;
}

double radial_eigenvalue(const RadialProblem& problem)
{
    problem.validate();
    const int n = problem.n_grid - 1; // interior nodes
    const double h = problem.geom.gap() / problem.n_grid;
    const double inv_h2 = 1.0 / (h * h);
    const double ll = problem.l * (problem.l + 1.0);

    std::vector<double> diag(static_cast<std::size_t>(n));
    double lo = 0.0;
    double hi = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = problem.geom.R_inner + (i + 1) * h;
        diag[i] = 2.0 * inv_h2 + ll / (r * r);
        hi = std::max(hi, diag[i] + 2.0 * inv_h2);
    }
    // The operator is positive, so the spectrum lies in (0, Gershgorin max].
    int it = 0;
    while (hi - lo > 1e-15 * hi) {
        if (++it > 400) {
            throw Error(ErrorCode::NonConvergence, "Sturm bisection did not settle");
        }
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (sturm_count(diag.data(), n, -inv_h2, mid) >= 1) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double rayleigh_quotient(const RadialProfile& profile, int l)
{
    const auto& s = profile.samples;
    const std::size_t n = s.size();
    if (n < 3) {
        throw Error(ErrorCode::Domain, "rayleigh_quotient needs at least three samples");
    }
    const double h = (s.back().r - s.front().r) / static_cast<double>(n - 1);
    const double ll = l * (l + 1.0);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double du = 0.0;
        if (i == 0) {
            du = (-3.0 * s[0].value + 4.0 * s[1].value - s[2].value) / (2.0 * h);
        } else if (i + 1 == n) {
            du = (3.0 * s[i].value - 4.0 * s[i - 1].value + s[i - 2].value) / (2.0 * h);
        } else {
            du = (s[i + 1].value - s[i - 1].value) / (2.0 * h);
        }
        const double r = s[i].r;
        const double w = (i == 0 || i + 1 == n) ? 0.5 * h : h;
        num += w * (du * du * r * r + ll * s[i].value * s[i].value);
        den += w * s[i].value * s[i].value * r * r;
    }
    return num / den;
}

} // namespace shellpc::oracle
