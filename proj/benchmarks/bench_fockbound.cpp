#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "fockbound/boundary_search.hpp"
#include "fockbound/families.hpp"
#include "fockbound/figures.hpp"
#include "fockbound/moments.hpp"
#include "fockbound/random_states.hpp"
#include "fockbound/relations.hpp"
#include "fockbound/two_mode.hpp"

using namespace fockbound;

static void BM_Moments(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const FockState s = make_coherent(0.25 * std::sqrt(static_cast<double>(dim)), dim);
  for (auto _ : state) benchmark::DoNotOptimize(moments(s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Moments)->RangeMultiplier(4)->Range(16, 1024)->Complexity(benchmark::oN);

static void BM_SqueezedConstruction(benchmark::State& state) {
  const SqueezeParams p = SqueezeParams::make(5.0, 0.3, 1.0, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(make_squeezed_coherent(p, 300));
}
BENCHMARK(BM_SqueezedConstruction);

static void BM_GroundStateTridiagonal(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ground_state_O({-50.0, -4.0, 0.0}, dim));
}
BENCHMARK(BM_GroundStateTridiagonal)->Arg(64)->Arg(107)->Arg(200);

static void BM_GroundStateDense(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ground_state_O({-50.0, -3.0, -2.0}, dim));
}
BENCHMARK(BM_GroundStateDense)->Arg(64)->Arg(107);

static void BM_TraceFrontier(benchmark::State& state) {
  std::vector<double> grid;
  for (int i = 0; i <= 25; ++i) grid.push_back(i);
  for (auto _ : state) benchmark::DoNotOptimize(trace_frontier(25.0, grid, default_dim(25.0)));
}
BENCHMARK(BM_TraceFrontier)->Unit(benchmark::kMillisecond);

static void BM_BruteForce(benchmark::State& state) {
  BruteForceOptions opts;
  opts.restarts = 4;
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_min_varN(3.0, 1.5, 15, opts));
}
BENCHMARK(BM_BruteForce)->Unit(benchmark::kMillisecond);

static void BM_DistanceToBoundary(benchmark::State& state) {
  const BoundaryPoint p{3.0, 2.0, 25.0, PointSource::FAMILY};
  for (auto _ : state) benchmark::DoNotOptimize(distance_to_boundary(p));
}
BENCHMARK(BM_DistanceToBoundary);

static void BM_SchwingerMoments(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const TwoModeState s = random_two_mode_state(rng, dim, dim);
  for (auto _ : state) benchmark::DoNotOptimize(schwinger_moments(s));
}
BENCHMARK(BM_SchwingerMoments)->Arg(12)->Arg(30)->Arg(60);

static void BM_Figure3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(figure3());
}
BENCHMARK(BM_Figure3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
