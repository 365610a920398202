#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "shellpc/oracle.hpp"
#include "shellpc/rootfind.hpp"
#include "shellpc/specfun.hpp"

using namespace shellpc;
using std::numbers::pi;

TEST_CASE("sine: first positive zero is pi")
{
    const double root = smallest_positive_root([](double x) { return std::sin(x); });
    CHECK(std::abs(root - pi) <= 1e-13);
}

TEST_CASE("tan x = x via x cos x - sin x")
{
    const double root = smallest_positive_root([](double x) { return x * std::cos(x) - std::sin(x); });
    CHECK(std::abs(root - 4.493409457909064) <= 1e-12);
    CHECK(std::abs(root - testing_oracles::first_tan_root()) <= 1e-12);
}

TEST_CASE("stokes condition at A = 2 lies between pi and the ball root and matches the FD oracle")
{
    const auto g = ShellGeometry::from_A(2.0);
    const double k = smallest_positive_root([&](double x) { return specfun::stokes_eigencondition(x, g); });
    CHECK(k > pi);
    CHECK(k < 4.4935);
    CHECK(k == doctest::Approx(3.2860065995081755).epsilon(1e-13)); // mpmath
    const double fd = oracle::radial_eigenvalue({g, 1, 4000});
    CHECK(std::abs(k * k - fd) / fd < 1e-5);
}

TEST_CASE("exact zero on a scan grid point is returned directly")
{
    // scan grid: 0.05 * i; x - 1 vanishes at i = 20
    const double root = smallest_positive_root([](double x) { return x - 1.0; });
    CHECK(std::abs(root - 1.0) <= 1e-13);
    RootSearchConfig cfg;
    cfg.scan_start = 0.5;
    cfg.scan_step = 0.25;
    std::vector<Bracket> trace;
    CHECK(smallest_positive_root([](double x) { return x - 1.0; }, cfg, &trace) == 1.0);
    REQUIRE(trace.size() == 1);
    CHECK(trace[0].lo == trace[0].hi);
}

TEST_CASE("errors")
{
    try {
        smallest_positive_root([](double) { return 1.0; });
        FAIL("expected NoSignChange");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoSignChange);
    }

    RootSearchConfig tight;
    tight.max_bisections = 3;
    try {
        smallest_positive_root([](double x) { return std::sin(x); }, tight);
        FAIL("expected Unconverged");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Unconverged);
    }

    RootSearchConfig bad;
    bad.scan_step = 0.0;
    CHECK_THROWS_AS(smallest_positive_root([](double x) { return x; }, bad), Error);
}

TEST_CASE("a pair of roots hidden inside one coarse step is caught by the fine re-scan")
{
    // (x - 1.01)(x - 1.03) is positive at every 0.05 grid point up to 3;
    // sin-like factor provides the coarse sign change at pi.
    auto f = [](double x) { return (x - 1.01) * (x - 1.03) * std::sin(x); };
    RootSearchConfig cfg;
    cfg.scan_step = 0.1; // quarter step 0.025 lands at 1.025 between the two roots
    try {
        smallest_positive_root(f, cfg);
        FAIL("expected SkippedRoot");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SkippedRoot);
    }
}

TEST_CASE("bracket invariant holds on every iteration")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> shift(0.3, 5.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double c = shift(rng);
        auto f = [c](double x) { return std::tanh(3.0 * (x - c)) + 0.1 * (x - c); };
        std::vector<Bracket> trace;
        const double root = smallest_positive_root(f, {}, &trace);
        CHECK(std::abs(root - c) < 1e-12);
        for (const Bracket& b : trace) {
            CHECK(b.lo <= b.hi);
            CHECK(((b.f_lo <= 0 && b.f_hi >= 0) || (b.f_lo >= 0 && b.f_hi <= 0)));
        }
        CHECK(trace.back().hi - trace.back().lo <= 1e-13);
    }
}

TEST_CASE("halving the scan step returns the same root")
{
    for (double A : {0.01, 0.5, 2.0, 30.0, 1000.0}) {
        const auto g = ShellGeometry::from_A(A);
        auto f = [&](double x) { return specfun::stokes_eigencondition(x, g); };
        RootSearchConfig half;
        half.scan_step = 0.025;
        CHECK(std::abs(smallest_positive_root(f) - smallest_positive_root(f, half)) <= 1e-13);
    }
}
