#include <benchmark/benchmark.h>

#include "elastodisk/phononic.hpp"

using namespace elastodisk;

static void BM_LatticeCorrection(benchmark::State& state) {
  ElasticMedium m(1.0, 1.0, 1.0);
  const Vec2 alpha(1.1, -0.6);
  const Vec2 x(0.12, -0.07);
  for (auto _ : state) benchmark::DoNotOptimize(lattice_correction(x, alpha, m));
}
BENCHMARK(BM_LatticeCorrection);

static void BM_QAlpha(benchmark::State& state) {
  ElasticMedium m(1.0, 1.0, 1.0);
  DiskBoundary base = make_disk(1.0, int(state.range(0)));
  const Vec2 alpha(1.1, -0.6);
  for (auto _ : state) benchmark::DoNotOptimize(matrix_Q_alpha(0.1, base, alpha, m));
}
BENCHMARK(BM_QAlpha)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
