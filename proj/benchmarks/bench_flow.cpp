#include <benchmark/benchmark.h>

#include "colorsampler/flow.hpp"
#include "colorsampler/graph_families.hpp"
#include "colorsampler/separators.hpp"
#include "colorsampler/state_space.hpp"

using namespace colorsampler;

namespace {

void route_all(benchmark::State& state, const Graph& g, int k) {
  const StateSpace s = enumerate_states(g, k);
  const SeparatorSchedule sched(g, find_minimal_order(g).order);
  const FlawRepairMap repair = build_flaw_repair_map(g, s);
  for (auto _ : state) benchmark::DoNotOptimize(route_all_flows(g, sched, s, repair));
  state.counters["pairs"] = static_cast<double>(s.num_proper() * s.num_proper());
}

void BM_RouteAllP3(benchmark::State& state) { route_all(state, families::path(3), 4); }
BENCHMARK(BM_RouteAllP3)->Unit(benchmark::kMillisecond);

void BM_RouteAllK3(benchmark::State& state) { route_all(state, families::complete(3), 4); }
BENCHMARK(BM_RouteAllK3)->Unit(benchmark::kMillisecond);

void BM_RouteAllC4(benchmark::State& state) { route_all(state, families::cycle(4), 4); }
BENCHMARK(BM_RouteAllC4)->Unit(benchmark::kMillisecond);

}  // namespace
