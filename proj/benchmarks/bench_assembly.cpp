#include <benchmark/benchmark.h>

#include "elastodisk/layer_ops.hpp"

using namespace elastodisk;

static void BM_AssembleS(benchmark::State& state) {
  ElasticMedium m(1.0, 1.0, 1.0);
  DiskBoundary b = make_disk(1.0, int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_S(b, Complex(0.05, 0.0), m));
}
BENCHMARK(BM_AssembleS)->Arg(64)->Arg(128)->Arg(256);

static void BM_AssembleKstar(benchmark::State& state) {
  ElasticMedium m(1.0, 1.0, 1.0);
  DiskBoundary b = make_disk(1.0, int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_Kstar(b, Complex(0.05, 0.0), m));
}
BENCHMARK(BM_AssembleKstar)->Arg(64)->Arg(128)->Arg(256);
