// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS to vary the team.

#include <benchmark/benchmark.h>

#include <cmath>

#include <vector>

#include "shellpc/greens.hpp"
#include "shellpc/kernels.hpp"
#include "shellpc/quadrature.hpp"
#include "shellpc/spectra.hpp"

namespace {

using namespace shellpc;

std::vector<double> sweep_grid(int n) { return make_grid(1e-3, 1e3, n, GridScale::Log); }

void BM_SweepSerial(benchmark::State& state)
{
    const auto grid = sweep_grid(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::sweep_table_serial(grid));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepParallel(benchmark::State& state)
{
    const auto grid = sweep_grid(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::sweep_table(grid));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

struct NystromSetup {
    GreensParams params;
    quad::Rule rule;
    std::vector<double> scale;

    explicit NystromSetup(int nodes)
        : params(GreensParams::for_sigma(0.5, nodes)), rule(quad::composite_gauss_legendre(0.5, 1.0, nodes / 16, 16))
    {
        for (std::size_t i = 0; i < rule.size(); ++i) {
            scale.push_back(rule.nodes[i] * std::sqrt(rule.weights[i]));
        }
    }

    double operator()(double r, double rho) const { return radial_kernel(r, rho, params); }
};

void BM_AssembleSerial(benchmark::State& state)
{
    const NystromSetup s(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::assemble_symmetric_serial(s.rule.nodes, s.scale, s));
    }
}

void BM_AssembleParallel(benchmark::State& state)
{
    const NystromSetup s(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::assemble_symmetric(s.rule.nodes, s.scale, s));
    }
}

void BM_MatvecSerial(benchmark::State& state)
{
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::vector<double> m(n * n, 0.5), x(n, 1.0), y(n);
    for (auto _ : state) {
        kernels::matvec_serial(m, x, y);
        benchmark::DoNotOptimize(y.data());
    }
}

void BM_MatvecParallel(benchmark::State& state)
{
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::vector<double> m(n * n, 0.5), x(n, 1.0), y(n);
    for (auto _ : state) {
        kernels::matvec(m, x, y);
        benchmark::DoNotOptimize(y.data());
    }
}

} // namespace

BENCHMARK(BM_SweepSerial)->Arg(64)->Arg(400);
BENCHMARK(BM_SweepParallel)->Arg(64)->Arg(400);
BENCHMARK(BM_AssembleSerial)->Arg(128)->Arg(512);
BENCHMARK(BM_AssembleParallel)->Arg(128)->Arg(512);
BENCHMARK(BM_MatvecSerial)->Arg(128)->Arg(1024);
BENCHMARK(BM_MatvecParallel)->Arg(128)->Arg(1024);

BENCHMARK_MAIN();
