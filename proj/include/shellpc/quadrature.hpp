#pragma once

#include <vector>

namespace shellpc::quad {

struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const noexcept { return nodes.size(); }

    template <class F>
    double integrate(F&& f) const
    {
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            s += weights[i] * f(nodes[i]);
        }
        return s;
    }
};

/// n-point Gauss-Legendre rule on [-1, 1].
Rule gauss_legendre(int n);

/// `panels` equal panels on [a, b], each carrying an `order`-point Gauss-Legendre rule.
Rule composite_gauss_legendre(double a, double b, int panels, int order);

/// Composite rule with 16-point panels and at least `nodes_per_unit` nodes per unit length.
Rule composite_by_density(double a, double b, int nodes_per_unit);

} // namespace shellpc::quad
