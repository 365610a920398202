#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "shellpc/eigenfun.hpp"
#include "shellpc/error.hpp"
#include "shellpc/greens.hpp"
#include "shellpc/kernels.hpp"
#include "shellpc/oracle.hpp"
#include "shellpc/specfun.hpp"
#include "shellpc/spectra.hpp"

using namespace shellpc;
using std::numbers::pi;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double time_limit; // seconds; 0 means unbounded
    std::function<Outcome()> body;
};

std::string fmt(const char* f, double a, double b = 0.0)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

std::vector<double> log_space(double lo, double hi, int n)
{
    return make_grid(lo, hi, n, GridScale::Log);
}

Outcome exact_laplace_constant()
{
    double worst_k = 0.0, worst_c = 0.0;
    for (double A : log_space(1e-3, 1e3, 50)) {
        const double k = laplace_root(ShellGeometry::from_A(A));
        worst_k = std::max(worst_k, std::abs(k - pi));
        worst_c = std::max(worst_c, std::abs(1.0 / k - 1.0 / pi));
    }
    return {worst_k <= 1e-10 && worst_c <= 1e-11, fmt("max|kappa-pi|=%.3g max|c_p-1/pi|=%.3g", worst_k, worst_c)};
}

Outcome printed_stokes_constant()
{
    const double c = stokes_first(ShellGeometry::from_A(0.0)).poincare;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10f", c);
    return {std::string(buf) == "0.2225481584", std::string("c_pS(0)=") + buf};
}

Outcome small_gap_limit()
{
    const double d100 = stokes_first(ShellGeometry::from_A(100.0)).kappa - pi;
    const double d1e4 = stokes_first(ShellGeometry::from_A(1e4)).kappa - pi;
    bool decreasing = true;
    double prev = 1e300;
    for (double A : log_space(1e-3, 1e4, 30)) {
        const double k = stokes_first(ShellGeometry::from_A(A)).kappa;
        decreasing = decreasing && k < prev;
        prev = k;
    }
    return {d100 > 0.0 && d100 < 1e-3 && d1e4 > 0.0 && d1e4 < 1e-7 && decreasing,
            fmt("kappa-pi: A=100 %.3g, A=1e4 %.3g", d100, d1e4) + (decreasing ? ", decreasing" : ", NOT decreasing")};
}

Outcome oracle_equivalence()
{
    double worst1 = 0.0, worst0 = 0.0;
    for (double A : {0.1, 0.5, 1.0, 2.0, 10.0, 50.0}) {
        const auto g = ShellGeometry::from_A(A);
        const double ref = stokes_first(g).lambda;
        worst1 = std::max(worst1, std::abs(oracle::radial_eigenvalue({g, 1, 4000}) - ref) / ref);
        worst0 = std::max(worst0, std::abs(oracle::radial_eigenvalue({g, 0, 4000}) - pi * pi) / (pi * pi));
    }
    return {worst1 < 1e-5 && worst0 < 1e-6, fmt("max rel l=1 %.3g, l=0 %.3g", worst1, worst0)};
}

Outcome greens_validation()
{
    double worst = 0.0, prev = 1e300;
    bool monotone = true;
    for (double s : {0.0, 0.25, 0.5, 0.75}) {
        const double est = inverse_norm_estimate(GreensParams::for_sigma(s, 128));
        const double exact = (1.0 - s) * (1.0 - s) / (pi * pi);
        worst = std::max(worst, std::abs(est - exact) / exact);
        monotone = monotone && est < prev;
        prev = est;
    }
    return {worst < 1e-2 && monotone, fmt("max rel error %.3g", worst) + (monotone ? ", monotone" : ", NOT monotone")};
}

Outcome bound_chain()
{
    constexpr double slack = 1e-14;
    const auto rows = kernels::sweep_table(default_table_grid());
    int checked = 0, violations = 0;
    for (const TableRow& row : rows) {
        if (row.A <= 0.0) {
            continue;
        }
        const double upper = std::min(std::sqrt(2.0) / pi * (1.0 + row.A / 2.0), (1.0 + 2.0 / row.A) / pi);
        const bool ok = row.c_pS <= 1.0 / pi + slack && 1.0 / pi <= upper + slack && row.c_pS <= row.c_p + slack;
        violations += ok ? 0 : 1;
        ++checked;
    }
    return {violations == 0 && checked > 0, fmt("%g rows, %g violations", checked, violations)};
}

Outcome identity_suite()
{
    constexpr double tol = 1e-9;
    constexpr int n = 1000;
    double w_rec = 0.0, w_sine = 0.0, w_equiv = 0.0;

    for (int i = 0; i < n; ++i) {
        const double t = 1e-3 * std::pow(1e5, i / double(n - 1));
        const double a = specfun::bessel_half(t) / t;
        const double b = specfun::bessel_neg_half(t);
        const double lhs = specfun::bessel_three_half(t);
        w_rec = std::max(w_rec, std::abs(lhs - (a - b)) / std::max({std::abs(a), std::abs(b)}));
        const double c = -(b / t + specfun::bessel_half(t));
        w_rec = std::max(w_rec, std::abs(specfun::bessel_neg_three_half(t) - c) / std::max(b / t, std::abs(c)));
    }

    // 40 x 25 grids over (kappa, A)
    for (int i = 0; i < 40; ++i) {
        const double k = 0.5 + 11.5 * i / 39.0;
        for (int j = 0; j < 25; ++j) {
            const double A = 0.05 * std::pow(2e4, j / 24.0);
            const auto g = ShellGeometry::from_A(A);
            const double scale = 2.0 / (pi * k * std::sqrt(g.R_inner * g.R_outer));
            const double closed = specfun::laplace_eigencondition(k, g);
            const double cross = specfun::laplace_eigencondition_cross(k, g);
            w_sine = std::max(w_sine, std::abs(closed - cross) / std::max(std::abs(cross), 1e-3 * scale));
        }
    }
    for (int i = 0; i < 40; ++i) {
        const double k = 2.0 + 8.0 * i / 39.0;
        for (int j = 0; j < 25; ++j) {
            const double A = 0.2 * std::pow(1e4, j / 24.0);
            const auto g = ShellGeometry::from_A(A);
            const double pref = specfun::stokes_trig_prefactor(k, g);
            const double scale = pref * (1.0 + 1.0 / (k * g.R_inner * g.R_outer));
            const double trig = pref * specfun::stokes_eigencondition(k, g);
            const double cross = specfun::stokes_eigencondition_cross(k, g);
            w_equiv = std::max(w_equiv, std::abs(trig - cross) / std::max(std::abs(cross), 1e-3 * scale));
        }
    }
    return {w_rec < tol && w_sine < tol && w_equiv < tol,
            fmt("recurrence %.3g, sine %.3g", w_rec, w_sine) + fmt(", trig/cross %.3g", w_equiv)};
}

Outcome eigenfunction_residuals()
{
    double w_res = 0.0, w_bnd = 0.0, w_norm = 0.0;
    for (Operator op : {Operator::Laplace, Operator::Stokes}) {
        const int l = op == Operator::Laplace ? 0 : 1;
        for (double A : {0.0, 0.1, 0.5, 1.0, 2.0, 10.0, 100.0}) {
            const auto g = ShellGeometry::from_A(A);
            const RadialMode m(g, op);
            w_res = std::max(w_res, testing_oracles::radial_ode_residual(m, g.R_inner, g.R_outer, m.kappa(), l));
            const double peak = std::abs(m(g.mid_radius()));
            w_bnd = std::max(w_bnd, std::abs(m(g.R_outer)) / peak);
            if (A > 0.0 || op == Operator::Stokes) {
                w_bnd = std::max(w_bnd, std::abs(m(g.R_inner)) / peak);
            }
            const RadialMode fine(g, op, 128);
            w_norm = std::max(w_norm, std::abs(fine.norm_constant() / m.norm_constant() - 1.0));
        }
    }
    return {w_res < 1e-6 && w_bnd < 1e-9 && w_norm < 1e-10,
            fmt("residual %.3g, boundary %.3g", w_res, w_bnd) + fmt(", norm drift %.3g", w_norm)};
}

Outcome sigma_to_zero()
{
    std::mt19937_64 rng(20);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int monotone_pairs = 0;
    for (int i = 0; i < 20; ++i) {
        auto point = [&] {
            const double r = 0.2 + 0.7 * u(rng);
            const double th = std::acos(2.0 * u(rng) - 1.0), ph = 2.0 * pi * u(rng);
            return Point3{r * std::sin(th) * std::cos(ph), r * std::sin(th) * std::sin(ph), r * std::cos(th)};
        };
        const Point3 x = point(), y = point();
        double prev = 1e300;
        bool ok = true;
        for (double s : {0.1, 0.01, 0.001}) {
            const double d = std::abs(greens_shell(x, y, GreensParams::for_sigma(s)) - greens_ball(x, y));
            ok = ok && d < prev;
            prev = d;
        }
        monotone_pairs += ok ? 1 : 0;
    }

    const RadialMode limit(ShellGeometry::from_sigma(0.0), Operator::Stokes);
    double prev = 1e300;
    bool converging = true;
    std::string sups;
    for (double s : {0.1, 0.01, 0.001}) {
        const RadialMode m(ShellGeometry::from_sigma(s), Operator::Stokes);
        double d = 0.0;
        for (int i = 0; i <= 800; ++i) {
            const double r = 0.2 + 0.8 * i / 800.0;
            d = std::max(d, std::abs(m(r) - limit(r)));
        }
        converging = converging && d < prev;
        prev = d;
        sups += fmt(" %.3g", d);
    }
    return {monotone_pairs == 20 && converging, fmt("%g/20 pairs monotone; profile sup", monotone_pairs) + sups};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "exact Laplace constant", 1.0, exact_laplace_constant},
        {2, "printed Stokes constant", 0.0, printed_stokes_constant},
        {3, "small-gap Stokes limit", 1.0, small_gap_limit},
        {4, "oracle equivalence", 10.0, oracle_equivalence},
        {5, "Green's validation", 30.0, greens_validation},
        {6, "bound chain", 0.0, bound_chain},
        {7, "identity suite", 0.0, identity_suite},
        {8, "eigenfunction residuals", 0.0, eigenfunction_residuals},
        {9, "sigma -> 0 convergence", 0.0, sigma_to_zero},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.time_limit > 0.0 && secs >= c.time_limit) {
            o.passed = false;
            o.detail += fmt(" (over %.0f s budget)", c.time_limit);
        }
        failures += o.passed ? 0 : 1;
        std::printf("%s criterion %d: %s [%.3f s] %s\n", o.passed ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
