#include <benchmark/benchmark.h>

#include "pkgenus/enumerate.hpp"
#include "pkgenus/sampler.hpp"

namespace {

using pkgenus::RandomSource;

void BM_UniformMatching(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int g = static_cast<int>(state.range(1));
  RandomSource rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(pkgenus::uniform_matching(n, g, rng));
  state.SetComplexityN(n);
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_UniformMatching)
    ->ArgsProduct({{1000, 10000, 100000, 1000000}, {2}})
    ->Unit(benchmark::kMicrosecond)
    ->Complexity(benchmark::oN);
BENCHMARK(BM_UniformMatching)->ArgsProduct({{100000}, {0, 1, 5, 20}})->Unit(benchmark::kMicrosecond);

void BM_PlaneTree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomSource rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(pkgenus::uniform_plane_tree(n, rng));
  state.SetComplexityN(n);
}
BENCHMARK(BM_PlaneTree)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMicrosecond)->Complexity();

void BM_UniformDiagram(benchmark::State& state) {
  const int length = static_cast<int>(state.range(0));
  RandomSource rng(3);
  pkgenus::arcs_distribution(length, 2);  // warm the count cache
  for (auto _ : state) benchmark::DoNotOptimize(pkgenus::uniform_diagram(length, 2, rng));
}
BENCHMARK(BM_UniformDiagram)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

}  // namespace
