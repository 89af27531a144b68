#include <benchmark/benchmark.h>

#include "pkgenus/energy.hpp"

namespace {

const pkgenus::EnergyParams kParams{0.1, -0.2, 0.05, -0.1, 0.3};

// Quadratic table build.
void BM_BuildPartitions(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pkgenus::build_partitions(m, kParams));
  state.SetComplexityN(m);
}
BENCHMARK(BM_BuildPartitions)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNSquared);

void BM_SampleGenus1(benchmark::State& state) {
  const int length = static_cast<int>(state.range(0));
  const auto tables = pkgenus::build_partitions(length / 2, kParams);
  pkgenus::RandomSource rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(pkgenus::sample_genus1(length, tables, rng));
}
BENCHMARK(BM_SampleGenus1)->Arg(100)->Arg(400)->Arg(1000)->Unit(benchmark::kMicrosecond);

}  // namespace
