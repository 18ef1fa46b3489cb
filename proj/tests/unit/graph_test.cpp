#include <gtest/gtest.h>

#include <sstream>

#include "colorsampler/error.hpp"
#include "colorsampler/graph.hpp"
#include "colorsampler/graph_families.hpp"

using namespace colorsampler;

TEST(ParseGraph, Triangle) {
  const Graph g = parse_graph("3 3\n1 2\n2 3\n1 3\n");
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_EQ(g.max_degree(), 2);
  EXPECT_TRUE(g.adjacent(0, 2));
}

TEST(ParseGraph, PathAndStar) {
  const Graph p = parse_graph("3 2\n1 2\n2 3");
  EXPECT_EQ(p.max_degree(), 2);
  EXPECT_FALSE(p.adjacent(0, 2));
  const Graph s = parse_graph("4 3\n1 2\n1 3\n1 4");
  EXPECT_EQ(s.max_degree(), 3);
  EXPECT_EQ(s.degree(3), 1);
}

TEST(ParseGraph, CommentsAndBlankLines) {
  const Graph g = parse_graph("# triangle\n3 3\n\n1 2\n# mid\n2 3\n1 3\n");
  EXPECT_EQ(g.num_edges(), 3u);
}

TEST(ParseGraph, DuplicateEdgesCollapse) {
  const Graph g = parse_graph("2 2\n1 2\n2 1\n");
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.max_degree(), 1);
}

TEST(ParseGraph, ErrorsCarryLineNumbers) {
  try {
    parse_graph("3 2\n1 2\n2 2\n");
    FAIL() << "self-loop accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  try {
    parse_graph("3 2\n1 2\n2 4\n");
    FAIL() << "out-of-range vertex accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(parse_graph("3 2\n1 2\n"), ParseError);
  EXPECT_THROW(parse_graph("3 1\n1 2\n2 3\n"), ParseError);
  EXPECT_THROW(parse_graph("x y\n"), ParseError);
  EXPECT_THROW(parse_graph(""), ParseError);
}

TEST(ParseGraph, RoundTrip) {
  const Graph g = families::grid(2, 3);
  std::ostringstream out;
  write_graph(out, g);
  const Graph h = parse_graph(out.str());
  EXPECT_EQ(h.edges(), g.edges());
}

TEST(Families, Shapes) {
  EXPECT_EQ(families::empty(4).num_edges(), 0u);
  EXPECT_EQ(families::path(5).num_edges(), 4u);
  EXPECT_EQ(families::cycle(5).max_degree(), 2);
  EXPECT_EQ(families::star(3).degree(0), 3);
  EXPECT_EQ(families::complete(5).num_edges(), 10u);
  EXPECT_EQ(families::grid(3, 3).num_edges(), 12u);
  EXPECT_EQ(families::random_gnp(6, 0.5, 3).edges(), families::random_gnp(6, 0.5, 3).edges());
  EXPECT_EQ(families::random_gnp(6, 1.0, 3).num_edges(), 15u);
}

TEST(LinearOrderTest, RanksAndParsing) {
  const LinearOrder o = parse_order("3 1 2", 3);
  EXPECT_EQ(o.at(1), 2);
  EXPECT_EQ(o.rank(2), 1);
  EXPECT_EQ(o.rank(0), 2);
  EXPECT_EQ(LinearOrder::identity(3).rank(2), 3);
  EXPECT_THROW(parse_order("1 1 2", 3), ParseError);
  EXPECT_THROW(parse_order("1 2", 3), ParseError);
  EXPECT_THROW(parse_order("1 2 4", 3), ParseError);
}
