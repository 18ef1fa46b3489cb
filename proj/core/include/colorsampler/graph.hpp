#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace colorsampler {

/// Vertex index. 0-based in the API; text formats use 1-based labels.
using Vertex = int;

/// Undirected edge stored with `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges (in either orientation) are
  /// merged; self-loops and out-of-range endpoints throw std::invalid_argument.
  Graph(int num_vertices, std::span<const std::pair<Vertex, Vertex>> edges);

  int num_vertices() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Neighbors of `v`, sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const noexcept { return max_degree_; }
  bool adjacent(Vertex a, Vertex b) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  int max_degree_ = 0;
};

/// Parses the edge-list format:
///
///     # comment
///     n m
///     u v      (m lines, 1-based labels, u != v)
///
/// Blank lines and lines whose first non-blank character is '#' are ignored.
/// Throws ParseError carrying the offending line number.
Graph parse_graph(std::string_view text);
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::filesystem::path& path);

/// Writes `g` in the edge-list format accepted by parse_graph.
void write_graph(std::ostream& out, const Graph& g);

/// Bijection vertex <-> rank, ranks 1..n.
class LinearOrder {
 public:
  LinearOrder() = default;

  static LinearOrder identity(int n);
  /// `sequence[i]` is the vertex placed at rank i+1. Throws std::invalid_argument
  /// unless `sequence` is a permutation of 0..n-1.
  static LinearOrder from_sequence(std::vector<Vertex> sequence);

  int size() const noexcept { return static_cast<int>(sequence_.size()); }
  int rank(Vertex v) const { return rank_[static_cast<std::size_t>(v)]; }
  Vertex at(int rank) const { return sequence_[static_cast<std::size_t>(rank - 1)]; }
  std::span<const Vertex> sequence() const noexcept { return sequence_; }

  bool operator==(const LinearOrder&) const = default;

 private:
  std::vector<Vertex> sequence_;
  std::vector<int> rank_;
};

/// Parses a whitespace-separated permutation of 1..n (vertex at rank 1 first).
LinearOrder parse_order(std::string_view text, int n);
LinearOrder load_order_file(const std::filesystem::path& path, int n);

}  // namespace colorsampler
