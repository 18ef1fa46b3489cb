#include <benchmark/benchmark.h>

#include "colorsampler/graph_families.hpp"
#include "colorsampler/separators.hpp"

using namespace colorsampler;

namespace {

void BM_MinimalOrderGrid(benchmark::State& state) {
  const Graph g = families::grid(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_minimal_order(g));
}
BENCHMARK(BM_MinimalOrderGrid)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_MinimalOrderRandom(benchmark::State& state) {
  const Graph g = families::random_gnp(static_cast<int>(state.range(0)), 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(find_minimal_order(g));
}
BENCHMARK(BM_MinimalOrderRandom)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
