#include <gtest/gtest.h>

#include <map>

#include "colorsampler/coloring.hpp"
#include "colorsampler/error.hpp"
#include "colorsampler/graph_families.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace colorsampler;
namespace f = colorsampler::families;

namespace {
Coloring col(std::vector<Color> c) { return Coloring(std::move(c)); }
}  // namespace

TEST(MonochromaticEdges, Triangle) {
  const Graph k3 = f::complete(3);
  EXPECT_TRUE(monochromatic_edges(k3, col({1, 2, 3})).empty());
  EXPECT_EQ(monochromatic_edges(k3, col({1, 1, 2})), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(monochromatic_edges(k3, col({1, 1, 1})).size(), 3u);
}

TEST(Classify, Examples) {
  const Graph k3 = f::complete(3);
  const auto flawed = classify(k3, col({1, 1, 2}));
  EXPECT_EQ(flawed.kind, ColoringKind::SinglyFlawed);
  EXPECT_EQ(flawed.flawed_vertices, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(classify(k3, col({1, 1, 1})).kind, ColoringKind::Invalid);
  EXPECT_EQ(classify(f::path(3), col({1, 2, 3})).kind, ColoringKind::Proper);
  const auto star = classify(f::star(3), col({2, 2, 2, 1}));
  EXPECT_EQ(star.kind, ColoringKind::SinglyFlawed);
  EXPECT_EQ(star.flawed_vertices, std::vector<Vertex>{0});
}

TEST(Classify, MatchesDefinitionExhaustively) {
  for (const auto& inst : corpus::instances()) {
    if (inst.graph.num_vertices() > 4) continue;
    oracle::for_each_coloring(inst.graph.num_vertices(), inst.k, [&](const std::vector<int>& s) {
      const Coloring sigma(s);
      const auto expected = oracle::classify(inst.graph, s);
      const auto got = classify(inst.graph, sigma).kind;
      EXPECT_EQ(static_cast<int>(got), static_cast<int>(expected)) << inst.name << " " << format_coloring(sigma);
      EXPECT_EQ(in_state_space(inst.graph, sigma), expected != oracle::Kind::Invalid);
      EXPECT_EQ(is_proper(inst.graph, sigma), expected == oracle::Kind::Proper);
    });
  }
}

TEST(Classify, RepairingAnyFlawedVertexGivesProper) {
  for (const auto& inst : corpus::instances()) {
    if (inst.graph.num_vertices() > 4) continue;
    oracle::for_each_coloring(inst.graph.num_vertices(), inst.k, [&](const std::vector<int>& s) {
      const Coloring sigma(s);
      const auto cls = classify(inst.graph, sigma);
      if (cls.kind != ColoringKind::SinglyFlawed) return;
      for (Vertex v : cls.flawed_vertices)
        for (Color c : available_colors(inst.graph, sigma, v, inst.k))
          EXPECT_TRUE(is_proper(inst.graph, sigma.recolored(v, c)));
    });
  }
}

TEST(AvailableColors, Examples) {
  EXPECT_EQ(available_colors(f::path(3), col({1, 2, 1}), 1, 4), (std::vector<Color>{2, 3, 4}));
  EXPECT_EQ(available_colors(f::empty(1), col({3}), 0, 4), (std::vector<Color>{1, 2, 3, 4}));
  EXPECT_EQ(available_colors(f::complete(3), col({1, 2, 3}), 0, 4), (std::vector<Color>{1, 4}));
}

TEST(AvailableColors, AtLeastKMinusDelta) {
  for (const auto& inst : corpus::instances()) {
    if (inst.graph.num_vertices() > 4) continue;
    const int floor = inst.k - inst.graph.max_degree();
    oracle::for_each_coloring(inst.graph.num_vertices(), inst.k, [&](const std::vector<int>& s) {
      for (Vertex v = 0; v < inst.graph.num_vertices(); ++v)
        EXPECT_GE(static_cast<int>(available_colors(inst.graph, Coloring(s), v, inst.k).size()), floor);
    });
  }
}

TEST(Greedy, Examples) {
  EXPECT_EQ(greedy_proper_coloring(f::complete(3), 4), col({1, 2, 3}));
  EXPECT_EQ(greedy_proper_coloring(f::empty(4), 2), col({1, 1, 1, 1}));
  EXPECT_EQ(greedy_proper_coloring(f::star(3), 5), col({1, 2, 2, 2}));
  EXPECT_THROW(greedy_proper_coloring(f::complete(3), 2), ConfigError);
}

TEST(ChiRecolor, PreimageBalance) {
  auto preimages = [](std::vector<Color> set, int k) {
    std::map<Color, int> count;
    for (Color c = 1; c <= k; ++c) ++count[chi_recolor(set, k, c)];
    return count;
  };
  for (const auto& [color, n] : preimages({1, 2, 3, 4, 5}, 13)) {
    EXPECT_GE(n, 2) << color;
    EXPECT_LE(n, 3) << color;
  }
  for (const auto& [color, n] : preimages({2, 4, 6, 8}, 8)) EXPECT_EQ(n, 2) << color;
  for (Color c = 1; c <= 5; ++c) EXPECT_EQ(chi_recolor(std::vector<Color>{7}, 5, c), 7);
  EXPECT_THROW(chi_recolor(std::vector<Color>{}, 3, 1), std::invalid_argument);
  EXPECT_THROW(chi_recolor(std::vector<Color>{1}, 3, 4), std::invalid_argument);
}

TEST(ChiRecolor, CeilingBoundOverRealAvailableSets) {
  for (const auto& inst : corpus::instances()) {
    if (inst.graph.num_vertices() > 4) continue;
    const int k = inst.k;
    const int d = inst.graph.max_degree();
    // (1+eps)/eps = k/(k-Δ); the bound is exact when that ratio is an integer.
    const int ratio_ceiling = (k + (k - d) - 1) / (k - d);
    oracle::for_each_coloring(inst.graph.num_vertices(), k, [&](const std::vector<int>& s) {
      const Coloring sigma(s);
      if (!in_state_space(inst.graph, sigma)) return;
      for (Vertex v = 0; v < inst.graph.num_vertices(); ++v) {
        const auto avail = available_colors(inst.graph, sigma, v, k);
        std::map<Color, int> count;
        for (Color c = 1; c <= k; ++c) ++count[chi_recolor(avail, k, c)];
        const int ceiling = (k + static_cast<int>(avail.size()) - 1) / static_cast<int>(avail.size());
        for (const auto& [c, n] : count) {
          EXPECT_LE(n, ceiling);
          EXPECT_LE(ceiling, ratio_ceiling);
          if (k % (k - d) == 0) EXPECT_LE(n, k / (k - d));
        }
      }
    });
  }
}

TEST(ColoringFormat, RoundTrip) {
  EXPECT_EQ(format_coloring(col({1, 4, 2})), "1 4 2");
  EXPECT_EQ(parse_coloring("1 4 2"), col({1, 4, 2}));
  EXPECT_THROW(parse_coloring("1 x"), ParseError);
}
