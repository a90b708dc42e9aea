#include <benchmark/benchmark.h>

#include "ktheta/analytic.hpp"
#include "ktheta/sweeps.hpp"

namespace {

using ktheta::sweeps::Mode;

Mode mode_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Mode::Serial : Mode::Parallel;
}

void BM_ArfCensus(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ktheta::sweeps::arf_census(g, mode_of(state)));
}
BENCHMARK(BM_ArfCensus)->ArgsProduct({{4, 6, 7}, {0, 1}})->ArgNames({"g", "parallel"});

void BM_DistinctTheta(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(ktheta::sweeps::distinct_theta_count(g, mode_of(state)));
}
BENCHMARK(BM_DistinctTheta)->ArgsProduct({{4, 6}, {0, 1}})->ArgNames({"g", "parallel"});

void BM_TwoRoute(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(ktheta::sweeps::two_route_violations(g, 2, mode_of(state)));
}
BENCHMARK(BM_TwoRoute)->ArgsProduct({{1, 2}, {0, 1}})->ArgNames({"g", "parallel"});

void BM_ParityCensus(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const auto model = ktheta::standard_model({g, 1, g % 2 == 0 ? 0 : 1});
  const auto period = ktheta::complex_structure(model, ktheta::coupled_imaginary_part(g, 0.5));
  const ktheta::ThetaSeriesParams params;
  for (auto _ : state)
    benchmark::DoNotOptimize(ktheta::theta_parity_census(period, params, mode_of(state)));
}
BENCHMARK(BM_ParityCensus)->ArgsProduct({{2, 3}, {0, 1}})->ArgNames({"g", "parallel"});

}  // namespace

BENCHMARK_MAIN();
