#include "shellpc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "shellpc/error.hpp"

namespace shellpc::quad {

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
void legendre(int n, double x, double& p, double& dp)
{
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
}

} // namespace

Rule gauss_legendre(int n)
{
    if (n < 1) {
        throw Error(ErrorCode::Domain, "gauss_legendre: need at least one node");
    }
    Rule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double p = 0.0;
        double dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            legendre(n, x, p, dp);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        legendre(n, x, p, dp);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.nodes[i] = -x;
        r.nodes[n - 1 - i] = x;
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        r.nodes[n / 2] = 0.0;
    }
    return r;
}

Rule composite_gauss_legendre(double a, double b, int panels, int order)
{
    if (!(a < b) || panels < 1) {
        throw Error(ErrorCode::Domain, "composite_gauss_legendre: bad interval or panel count");
    }
    const Rule ref = gauss_legendre(order);
    Rule r;
    r.nodes.reserve(static_cast<std::size_t>(panels) * order);
    r.weights.reserve(r.nodes.capacity());
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        for (std::size_t i = 0; i < ref.size(); ++i) {
            r.nodes.push_back(lo + 0.5 * h * (ref.nodes[i] + 1.0));
            r.weights.push_back(0.5 * h * ref.weights[i]);
        }
    }
    return r;
}

Rule composite_by_density(double a, double b, int nodes_per_unit)
{
    constexpr int order = 16;
    const double needed = std::ceil(nodes_per_unit * (b - a) / order);
    const int panels = std::max(1, static_cast<int>(needed));
    return composite_gauss_legendre(a, b, panels, order);
}

} // namespace shellpc::quad
