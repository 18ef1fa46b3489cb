#pragma once

#include <cstdint>
#include <vector>

#include "colorsampler/graph.hpp"

namespace colorsampler {

/// Minimal vertex separator for prefix length `j` (1 <= j <= n): the vertices ranked
/// after j that have a neighbor ranked at or before j. Sorted by rank.
std::vector<Vertex> minimal_vertex_separator(const Graph& g, const LinearOrder& order, int j);

/// max_j |minimal_vertex_separator(g, order, j)|.
int vertex_separation_number(const Graph& g, const LinearOrder& order);

struct MinimalOrder {
  LinearOrder order;
  int vsn = 0;
};

inline constexpr int kDefaultExactOrderCap = 20;

/// Exact minimum of vertex_separation_number over all linear orders, which is the
/// pathwidth. Subset dynamic programming, O(2^n * n). Throws BudgetExceeded when
/// n > max_vertices; callers should then supply an order explicitly.
MinimalOrder find_minimal_order(const Graph& g, int max_vertices = kDefaultExactOrderCap);

/// Per-phase separators and quantum sets of the canonical-path schedule induced by
/// a linear order.
///
/// Phase j (1-based rank) has |S_j|+1 steps. Step (j,1) recolors the vertex of rank
/// j to its destination color; step (j,l) for l >= 2 recolors the (l-1)-th vertex of
/// S_j, separators being sorted by rank. A vertex becomes "quantum" (its color along
/// the paths is no longer a function of the endpoints) when a splitting step recolors
/// it, and stops being quantum once its own phase's first step has run.
///
/// `quantum_set(j, l)` is the quantum set of the states produced by step (j, l), so it
/// includes the vertex that step recolored. l = |S_j|+2 names the phase's terminal
/// time and yields the same set as its last step.
class SeparatorSchedule {
 public:
  SeparatorSchedule(const Graph& g, LinearOrder order);

  const LinearOrder& order() const noexcept { return order_; }
  int num_vertices() const noexcept { return order_.size(); }

  /// S_j, sorted by rank.
  const std::vector<Vertex>& separator(int j) const { return separators_[idx(j)]; }
  /// A_j = vertices with rank <= j, in rank order.
  std::vector<Vertex> prefix(int j) const;
  /// V \ A_j, in rank order.
  std::vector<Vertex> suffix(int j) const;

  int steps_in_phase(int j) const { return static_cast<int>(separator(j).size()) + 1; }
  /// Vertex recolored at step (j, l), 1 <= l <= |S_j|+1.
  Vertex recolored_vertex(int j, int l) const;
  const std::vector<Vertex>& quantum_set(int j, int l) const;

  int vsn() const noexcept { return vsn_; }
  /// vsn / log2(n); 0 when n < 2.
  double lambda() const noexcept;
  /// n + sum_j |S_j|: the number of steps of every canonical path.
  std::int64_t path_length() const noexcept { return path_length_; }

 private:
  std::size_t idx(int j) const;

  LinearOrder order_;
  std::vector<std::vector<Vertex>> separators_;
  // quantum_[j-1][l-1], l = 1..|S_j|+1
  std::vector<std::vector<std::vector<Vertex>>> quantum_;
  int vsn_ = 0;
  std::int64_t path_length_ = 0;
};

SeparatorSchedule build_separator_schedule(const Graph& g, const LinearOrder& order);

}  // namespace colorsampler
