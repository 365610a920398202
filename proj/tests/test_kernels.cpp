#include <doctest.h>

#include <cmath>
#include <random>

#include "shellpc/error.hpp"
#include "shellpc/greens.hpp"
#include "shellpc/kernels.hpp"
#include "shellpc/quadrature.hpp"

using namespace shellpc;

TEST_CASE("parallel table sweep equals the serial reference")
{
    const auto grid = make_grid(1e-3, 1e3, 97, GridScale::Log);
    const auto par = kernels::sweep_table(grid);
    const auto ser = kernels::sweep_table_serial(grid);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].A == grid[i]);
        CHECK(par[i].kappa_S == ser[i].kappa_S);
        CHECK(par[i].c_pS == ser[i].c_pS);
        CHECK(par[i].lambda_L == ser[i].lambda_L);
    }
}

TEST_CASE("parallel sweep propagates errors")
{
    const std::vector<double> grid{1.0, -1.0, 2.0};
    CHECK_THROWS_AS(kernels::sweep_table(grid), Error);
}

TEST_CASE("parallel assembly and matvec equal the serial reference")
{
    const GreensParams p = GreensParams::for_sigma(0.3);
    const quad::Rule rule = quad::composite_gauss_legendre(0.3, 1.0, 6, 16);
    std::vector<double> scale(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) {
        scale[i] = rule.nodes[i] * std::sqrt(rule.weights[i]);
    }
    auto k = [&](double r, double rho) { return radial_kernel(r, rho, p); };
    const auto mp = kernels::assemble_symmetric(rule.nodes, scale, k);
    const auto ms = kernels::assemble_symmetric_serial(rule.nodes, scale, k);
    CHECK(mp == ms);

    std::mt19937_64 rng(1);
    std::normal_distribution<double> nd;
    std::vector<double> x(rule.size());
    for (double& v : x) {
        v = nd(rng);
    }
    std::vector<double> yp(x.size()), ys(x.size());
    kernels::matvec(mp, x, yp);
    kernels::matvec_serial(ms, x, ys);
    CHECK(yp == ys);
    CHECK(kernels::max_threads() >= 1);
}

TEST_CASE("gauss-legendre rules")
{
    for (int n : {1, 2, 5, 16, 64}) {
        const auto r = quad::gauss_legendre(n);
        double wsum = 0.0;
        for (double w : r.weights) {
            wsum += w;
        }
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
        // exact for degree 2n - 1
        const int deg = 2 * n - 2;
        const double exact = 2.0 / (deg + 1);
        CHECK(r.integrate([&](double x) { return std::pow(x, deg); }) == doctest::Approx(exact).epsilon(1e-13));
    }
    const auto c = quad::composite_by_density(0.0, 2.5, 64);
    CHECK(c.size() >= 160);
    CHECK(c.integrate([](double x) { return std::exp(x); }) == doctest::Approx(std::exp(2.5) - 1.0).epsilon(1e-14));
}
