#include <benchmark/benchmark.h>

#include "brio/brio.hpp"

namespace {

using namespace brio;

void BM_SolveTwoShock(benchmark::State& state) {
    const FluxParams p{1e-4, 1e-4};
    for (auto _ : state) benchmark::DoNotOptimize(solve_riemann({1, 1}, {-1, 1}, p));
}
BENCHMARK(BM_SolveTwoShock);

void BM_SolveCavitating(benchmark::State& state) {
    const FluxParams p{1e-6, 1e-6};
    for (auto _ : state) benchmark::DoNotOptimize(solve_riemann({-1, 1}, {1, 1}, p));
}
BENCHMARK(BM_SolveCavitating);

void BM_SampleFan(benchmark::State& state) {
    const RiemannSolution sol = solve_riemann({0, 1}, {1, 1.5}, {0.3, 0.3});
    double xi = -0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample(sol, xi));
        xi = xi > 1.0 ? -0.5 : xi + 1e-3;
    }
}
BENCHMARK(BM_SampleFan);

void BM_SweepBoth(benchmark::State& state) {
    Schedule s;
    s.count = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sweep_both({1, 1}, {-1, 1}, s));
}
BENCHMARK(BM_SweepBoth)->Arg(10)->Arg(20);

void BM_WeakResidualDelta(benchmark::State& state) {
    const RiemannSolution sol = solve_transport({1, 2}, {-1, 2});
    const std::vector<BumpTestFn> bumps{make_bump(0.3, 1.0, 1.0, 0.5)};
    for (auto _ : state) benchmark::DoNotOptimize(weak_residual(sol, bumps));
}
BENCHMARK(BM_WeakResidualDelta);

void BM_LaxFriedrichs(benchmark::State& state) {
    Grid g;
    g.n_cells = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lax_friedrichs_run({0, 1}, {1, 1}, {1, 0}, g));
}
BENCHMARK(BM_LaxFriedrichs)->Arg(200)->Arg(800);

}  // namespace

BENCHMARK_MAIN();
