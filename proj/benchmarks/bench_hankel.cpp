#include <benchmark/benchmark.h>

#include "elastodisk/hankel.hpp"

using namespace elastodisk;

static void BM_HankelSeries(benchmark::State& state) {
  Complex z(double(state.range(0)), 0.02);
  for (auto _ : state) benchmark::DoNotOptimize(hankel_h0(z) + hankel_h1(z));
}
BENCHMARK(BM_HankelSeries)->Arg(1)->Arg(8)->Arg(20);

static void BM_HankelAsymptotic(benchmark::State& state) {
  Complex z(40.0, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(hankel_h0(z));
}
BENCHMARK(BM_HankelAsymptotic);
