#include <benchmark/benchmark.h>

#include "elastodisk/resonance.hpp"

using namespace elastodisk;

static void BM_ScatterSolve(benchmark::State& state) {
  ElasticMedium m(1.0, 1.0, 1.0);
  ContrastParams c = ContrastParams::from_epsilon_tau(1e-4, 1.0);
  DiskBoundary b = make_disk(1.0, int(state.range(0)));
  const Vec2 d(1.0, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_scattering(Complex(0.05, 0.0), d, b, m, c));
}
BENCHMARK(BM_ScatterSolve)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_ResonanceRoots(benchmark::State& state) {
  ElasticMedium m(1.0, 1.0, 1.0);
  ContrastParams c = ContrastParams::from_epsilon_tau(1e-4, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_resonances(1.0, m, c));
}
BENCHMARK(BM_ResonanceRoots);
