#include "colorsampler/separators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "colorsampler/error.hpp"

namespace colorsampler {

std::vector<Vertex> minimal_vertex_separator(const Graph& g, const LinearOrder& order, int j) {
  const int n = g.num_vertices();
  if (order.size() != n) throw std::invalid_argument("order size does not match graph");
  if (j < 1 || j > n) throw std::out_of_range("separator index out of range");
  std::vector<Vertex> sep;
  for (int r = j + 1; r <= n; ++r) {
    const Vertex u = order.at(r);
    for (Vertex w : g.neighbors(u)) {
      if (order.rank(w) <= j) {
        sep.push_back(u);
        break;
      }
    }
  }
  return sep;
}

int vertex_separation_number(const Graph& g, const LinearOrder& order) {
  int best = 0;
  for (int j = 1; j <= g.num_vertices(); ++j)
    best = std::max(best, static_cast<int>(minimal_vertex_separator(g, order, j).size()));
  return best;
}

MinimalOrder find_minimal_order(const Graph& g, int max_vertices) {
  const int n = g.num_vertices();
  if (n > max_vertices || n > 26)
    throw BudgetExceeded("exact vertex separation search supports at most " +
                         std::to_string(std::min(max_vertices, 26)) + " vertices (graph has " +
                         std::to_string(n) + "); supply a linear order explicitly");
  if (n == 0) return {LinearOrder::identity(0), 0};

  using Mask = std::uint32_t;
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
  }

  // best[S]: min over orderings of S as a prefix of the max boundary size seen.
  constexpr std::uint8_t kUnset = std::numeric_limits<std::uint8_t>::max();
  std::vector<Mask> nbhd(subsets, 0);
  std::vector<std::uint8_t> best(subsets, kUnset);
  std::vector<std::int8_t> last(subsets, -1);
  best[0] = 0;
  for (std::size_t s = 1; s < subsets; ++s) {
    const Mask set = static_cast<Mask>(s);
    const int low = std::countr_zero(set);
    nbhd[s] = nbhd[s & (s - 1)] | adj[static_cast<std::size_t>(low)];
    const auto boundary = static_cast<std::uint8_t>(std::popcount(nbhd[s] & ~set));
    std::uint8_t value = kUnset;
    std::int8_t arg = -1;
    for (Mask rest = set; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint8_t cand = std::max(best[s & ~(std::size_t{1} << v)], boundary);
      if (cand <= value) {
        value = cand;
        arg = static_cast<std::int8_t>(v);
      }
    }
    best[s] = value;
    last[s] = arg;
  }

  std::vector<Vertex> sequence(static_cast<std::size_t>(n));
  std::size_t s = subsets - 1;
  for (int r = n - 1; r >= 0; --r) {
    const int v = last[s];
    sequence[static_cast<std::size_t>(r)] = v;
    s &= ~(std::size_t{1} << v);
  }
  return {LinearOrder::from_sequence(std::move(sequence)), best[subsets - 1]};
}

SeparatorSchedule::SeparatorSchedule(const Graph& g, LinearOrder order) : order_(std::move(order)) {
  const int n = g.num_vertices();
  if (order_.size() != n) throw std::invalid_argument("order size does not match graph");
  separators_.reserve(static_cast<std::size_t>(n));
  path_length_ = n;
  for (int j = 1; j <= n; ++j) {
    separators_.push_back(minimal_vertex_separator(g, order_, j));
    vsn_ = std::max(vsn_, static_cast<int>(separators_.back().size()));
    path_length_ += static_cast<std::int64_t>(separators_.back().size());
  }

  // Replay the schedule: splitting steps put their vertex into the quantum set, the
  // vertex's own phase takes it out.
  std::vector<bool> quantum(static_cast<std::size_t>(n), false);
  auto snapshot = [&] {
    std::vector<Vertex> set;
    for (int r = 1; r <= n; ++r)
      if (quantum[static_cast<std::size_t>(order_.at(r))]) set.push_back(order_.at(r));
    return set;
  };
  quantum_.resize(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    auto& phase = quantum_[static_cast<std::size_t>(j - 1)];
    quantum[static_cast<std::size_t>(order_.at(j))] = false;
    phase.push_back(snapshot());
    for (Vertex u : separators_[static_cast<std::size_t>(j - 1)]) {
      quantum[static_cast<std::size_t>(u)] = true;
      phase.push_back(snapshot());
    }
  }
}

std::size_t SeparatorSchedule::idx(int j) const {
  if (j < 1 || j > num_vertices()) throw std::out_of_range("phase index out of range");
  return static_cast<std::size_t>(j - 1);
}

std::vector<Vertex> SeparatorSchedule::prefix(int j) const {
  idx(j);
  auto seq = order_.sequence();
  return {seq.begin(), seq.begin() + j};
}

std::vector<Vertex> SeparatorSchedule::suffix(int j) const {
  idx(j);
  auto seq = order_.sequence();
  return {seq.begin() + j, seq.end()};
}

Vertex SeparatorSchedule::recolored_vertex(int j, int l) const {
  const auto& sep = separators_[idx(j)];
  if (l < 1 || l > static_cast<int>(sep.size()) + 1) throw std::out_of_range("step out of range");
  return l == 1 ? order_.at(j) : sep[static_cast<std::size_t>(l - 2)];
}

const std::vector<Vertex>& SeparatorSchedule::quantum_set(int j, int l) const {
  const auto& phase = quantum_[idx(j)];
  const int steps = static_cast<int>(phase.size());
  if (l < 1 || l > steps + 1) throw std::out_of_range("step out of range");
  return phase[static_cast<std::size_t>(std::min(l, steps) - 1)];
}

double SeparatorSchedule::lambda() const noexcept {
  const int n = num_vertices();
  return n < 2 ? 0.0 : static_cast<double>(vsn_) / std::log2(static_cast<double>(n));
}

SeparatorSchedule build_separator_schedule(const Graph& g, const LinearOrder& order) {
  return SeparatorSchedule(g, order);
}

}  // namespace colorsampler
