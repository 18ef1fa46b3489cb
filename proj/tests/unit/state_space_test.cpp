#include <gtest/gtest.h>

#include "colorsampler/error.hpp"
#include "colorsampler/graph_families.hpp"
#include "colorsampler/state_space.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace colorsampler;
namespace f = colorsampler::families;

TEST(EnumerateStates, Examples) {
  const StateSpace k3 = enumerate_states(f::complete(3), 4);
  EXPECT_EQ(k3.num_proper(), 24u);
  EXPECT_EQ(k3.num_singly_flawed(), 36u);
  const StateSpace p3 = enumerate_states(f::path(3), 4);
  EXPECT_EQ(p3.num_proper(), 36u);
  EXPECT_EQ(p3.num_singly_flawed(), 28u);
  EXPECT_EQ(enumerate_states(f::cycle(4), 4).num_proper(), 84u);
}

TEST(EnumerateStates, MatchesChromaticPolynomials) {
  for (int k = 3; k <= 5; ++k)
    for (int n = 2; n <= 5; ++n) {
      EXPECT_EQ(static_cast<std::int64_t>(enumerate_states(f::path(n), k).num_proper()), oracle::chromatic_path(n, k));
      if (n >= 3)
        EXPECT_EQ(static_cast<std::int64_t>(enumerate_states(f::cycle(n), k).num_proper()),
                  oracle::chromatic_cycle(n, k));
      EXPECT_EQ(static_cast<std::int64_t>(enumerate_states(f::complete(n), k).num_proper()),
                oracle::chromatic_complete(n, k));
      EXPECT_EQ(static_cast<std::int64_t>(enumerate_states(f::star(n), k).num_proper()),
                oracle::chromatic_star(n, k));
    }
}

TEST(EnumerateStates, MatchesBruteForceOnCorpus) {
  for (const auto& inst : corpus::instances()) {
    const StateSpace space = enumerate_states(inst.graph, inst.k);
    const auto counts = oracle::count_states(inst.graph, inst.k);
    EXPECT_EQ(space.num_proper(), counts.proper) << inst.name << " k=" << inst.k;
    EXPECT_EQ(space.num_singly_flawed(), counts.flawed) << inst.name << " k=" << inst.k;
    const auto kn = static_cast<std::uint64_t>(inst.k) * static_cast<std::uint64_t>(inst.graph.num_vertices());
    EXPECT_LE(space.num_singly_flawed(), kn * space.num_proper()) << inst.name;
  }
}

TEST(EnumerateStates, IndexingIsCanonical) {
  const StateSpace space = enumerate_states(f::path(3), 4);
  for (StateIndex i = 0; i < space.size(); ++i) {
    EXPECT_EQ(space.index_of(space.state(i)), i);
    EXPECT_EQ(space.is_proper(i), i < space.num_proper());
    if (i + 1 < space.num_proper() || (i >= space.num_proper() && i + 1 < space.size()))
      EXPECT_LT(space.state(i), space.state(i + 1));
  }
  EXPECT_EQ(space.state(0), Coloring({1, 2, 1}));
  EXPECT_FALSE(space.is_proper(*space.index_of(Coloring({1, 1, 1}))));
  EXPECT_FALSE(enumerate_states(f::complete(3), 4).index_of(Coloring({1, 1, 1})).has_value());
}

TEST(EnumerateStates, Budget) {
  EXPECT_THROW(enumerate_states(f::path(8), 4, 1000), BudgetExceeded);
}

TEST(FlawRepairMap, TriangleExample) {
  const Graph k3 = f::complete(3);
  const StateSpace space = enumerate_states(k3, 4);
  const FlawRepairMap g = build_flaw_repair_map(k3, space);
  const StateIndex flawed = *space.index_of(Coloring({1, 1, 2}));
  EXPECT_EQ(space.state(g.image(flawed)), Coloring({3, 1, 2}));
  EXPECT_EQ(g.repaired_vertex(flawed), 0);
  EXPECT_LE(g.max_multiplicity(), 12u);
}

TEST(FlawRepairMap, ImagesProperAndBounded) {
  for (const auto& inst : corpus::instances()) {
    const StateSpace space = enumerate_states(inst.graph, inst.k);
    const FlawRepairMap g = build_flaw_repair_map(inst.graph, space);
    std::vector<std::size_t> count(space.num_proper(), 0);
    for (StateIndex s = space.num_proper(); s < space.size(); ++s) {
      const Coloring from = space.state(s);
      const Coloring to = space.state(g.image(s));
      EXPECT_TRUE(oracle::classify(inst.graph, std::vector<int>(to.colors().begin(), to.colors().end())) ==
                  oracle::Kind::Proper);
      int differing = 0;
      for (Vertex v = 0; v < inst.graph.num_vertices(); ++v) differing += from[v] != to[v];
      EXPECT_EQ(differing, 1);
      ++count[g.image(s)];
    }
    const auto kn = static_cast<std::size_t>(inst.k * inst.graph.num_vertices());
    for (StateIndex p = 0; p < space.num_proper(); ++p) {
      EXPECT_EQ(g.preimage_count(p), count[p]);
      EXPECT_LE(count[p], kn);
    }
  }
}

TEST(FlawRepairMap, NeedsTwoSpareColors) {
  const Graph k3 = f::complete(3);
  EXPECT_THROW(build_flaw_repair_map(k3, enumerate_states(k3, 3)), ConfigError);
}
