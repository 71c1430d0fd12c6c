#include <benchmark/benchmark.h>

#include <cmath>
#include <memory>

#include "nsexpander/cavitating_solver.hpp"
#include "nsexpander/smooth_solver.hpp"

using namespace nsexpander;

namespace {

void BM_ExpMoments(benchmark::State& state) {
    double out[6];
    double z = 0.0;
    for (auto _ : state) {
        exp_moments(z, out);
        benchmark::DoNotOptimize(out);
        z = z < 60 ? z + 0.37 : 0.0;
    }
}
BENCHMARK(BM_ExpMoments);

void BM_WeightedVolterra(benchmark::State& state) {
    const auto g = RadialGrid::from_zero(30.0, state.range(0));
    std::vector<double> f(g.size()), e(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        f[i] = std::exp(-g[i]);
        e[i] = 0.125 * g[i] * g[i];
    }
    for (auto _ : state) benchmark::DoNotOptimize(weighted_volterra(g.nodes(), f, e, 2));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WeightedVolterra)->Arg(1000)->Arg(2000)->Arg(4000)->Arg(8000)->Complexity();

void BM_SmoothStep(benchmark::State& state) {
    const auto g = std::make_shared<const RadialGrid>(RadialGrid::from_zero(30.0, state.range(0)));
    const SmoothBoundaryData b{1.0, 1e-3};
    const auto seed = seed_smooth(g, b);
    for (auto _ : state) benchmark::DoNotOptimize(psi_step(seed, b, PhysicalParams{}));
}
BENCHMARK(BM_SmoothStep)->Arg(1000)->Arg(4000)->Unit(benchmark::kMicrosecond);

void BM_CavitatingStep(benchmark::State& state) {
    const CavitatingBoundaryData b{1e-2, 1e-1, 1e-2, 1e-3};
    const auto c = SolveConfig::cavitating_defaults(b);
    const auto g = std::make_shared<const RadialGrid>(RadialGrid::from_rmin(c.r_min, c.r_max, state.range(0), c.grading));
    const auto seed = seed_cavitating(b, g, 3);
    for (auto _ : state) benchmark::DoNotOptimize(psi_step_cavitating(seed, b, PhysicalParams{}));
}
BENCHMARK(BM_CavitatingStep)->Arg(1000)->Arg(4000)->Unit(benchmark::kMicrosecond);

void BM_SmoothSolve(benchmark::State& state) {
    auto cfg = SolveConfig::smooth_defaults();
    cfg.n_cells = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(solve_smooth(PhysicalParams{}, SmoothBoundaryData{1.0, 1e-3}, cfg));
}
BENCHMARK(BM_SmoothSolve)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_CavitatingSolve(benchmark::State& state) {
    const CavitatingBoundaryData b{1e-2, 1e-1, 1e-2, 1e-3};
    auto cfg = SolveConfig::cavitating_defaults(b);
    cfg.n_cells = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(solve_cavitating(PhysicalParams{}, b, cfg));
}
BENCHMARK(BM_CavitatingSolve)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
