#include <benchmark/benchmark.h>

#include "colorsampler/chain.hpp"
#include "colorsampler/graph_families.hpp"

using namespace colorsampler;

namespace {

void BM_SingleFlawStep(benchmark::State& state) {
  const Graph g = families::grid(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  const ChainConfig cfg{g.max_degree() + 2};
  Coloring sigma = greedy_proper_coloring(g, cfg.k);
  Rng rng(1);
  for (auto _ : state) {
    sigma = single_flaw_step(g, cfg, sigma, rng);
    benchmark::DoNotOptimize(sigma);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SingleFlawStep)->Arg(4)->Arg(16)->Arg(64);

void BM_GlauberStep(benchmark::State& state) {
  const Graph g = families::grid(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  const ChainConfig cfg{g.max_degree() + 2, ChainKind::Glauber};
  Coloring sigma = greedy_proper_coloring(g, cfg.k);
  Rng rng(1);
  for (auto _ : state) {
    sigma = glauber_step(g, cfg, sigma, rng);
    benchmark::DoNotOptimize(sigma);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_GlauberStep)->Arg(4)->Arg(16)->Arg(64);

}  // namespace
