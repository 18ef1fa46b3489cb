#include <benchmark/benchmark.h>

#include "colorsampler/graph_families.hpp"
#include "colorsampler/state_space.hpp"
#include "colorsampler/transition_matrix.hpp"

using namespace colorsampler;

namespace {

void BM_EnumerateCycle(benchmark::State& state) {
  const Graph g = families::cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_states(g, 4));
}
BENCHMARK(BM_EnumerateCycle)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_BuildMatrixCycle(benchmark::State& state) {
  const Graph g = families::cycle(static_cast<int>(state.range(0)));
  const StateSpace s = enumerate_states(g, 4);
  for (auto _ : state) benchmark::DoNotOptimize(build_transition_matrix(g, ChainConfig{4}, s, s.size()));
  state.counters["omega"] = static_cast<double>(s.size());
}
BENCHMARK(BM_BuildMatrixCycle)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
