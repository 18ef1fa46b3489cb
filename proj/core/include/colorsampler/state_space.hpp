#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "colorsampler/coloring.hpp"
#include "colorsampler/graph.hpp"

namespace colorsampler {

/// Dense index into Ω. Proper colorings occupy [0, num_proper()), singly-flawed
/// ones follow; each block is in lexicographic order of the color vectors.
using StateIndex = std::size_t;

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Exhaustive Ω = C_p ∪ C_sf for a small graph.
class StateSpace {
 public:
  StateSpace(int num_vertices, int k, std::vector<std::uint64_t> proper_codes,
             std::vector<std::uint64_t> flawed_codes);

  int num_vertices() const noexcept { return n_; }
  int num_colors() const noexcept { return k_; }

  std::size_t size() const noexcept { return codes_.size(); }
  std::size_t num_proper() const noexcept { return num_proper_; }
  std::size_t num_singly_flawed() const noexcept { return codes_.size() - num_proper_; }
  bool is_proper(StateIndex i) const noexcept { return i < num_proper_; }

  Coloring state(StateIndex i) const { return decode(codes_[i]); }
  std::optional<StateIndex> index_of(const Coloring& sigma) const;

  /// Base-k packing with vertex 0 most significant; order-preserving w.r.t.
  /// lexicographic comparison of colorings.
  std::uint64_t encode(const Coloring& sigma) const;
  Coloring decode(std::uint64_t code) const;
  std::optional<StateIndex> index_of_code(std::uint64_t code) const;
  std::uint64_t code(StateIndex i) const noexcept { return codes_[i]; }
  /// Place value of vertex v in the packed code.
  std::uint64_t place_value(Vertex v) const noexcept { return place_[static_cast<std::size_t>(v)]; }

 private:
  int n_;
  int k_;
  std::size_t num_proper_;
  std::vector<std::uint64_t> codes_;
  std::vector<std::uint64_t> place_;
};

/// Scans all k^n colorings. Throws BudgetExceeded when k^n > budget.
StateSpace enumerate_states(const Graph& g, int k,
                            std::uint64_t budget = kDefaultEnumerationBudget);

/// Deterministic g': C_sf -> C_p. Each singly-flawed coloring is repaired by
/// recoloring its smallest flawed vertex with its smallest available color.
class FlawRepairMap {
 public:
  FlawRepairMap(std::vector<StateIndex> image, std::vector<Vertex> repaired_vertex,
                std::size_t num_proper);

  /// g'(flawed); `flawed` must be a singly-flawed index.
  StateIndex image(StateIndex flawed) const;
  Vertex repaired_vertex(StateIndex flawed) const;
  /// Number of singly-flawed colorings mapped onto `proper`.
  std::size_t preimage_count(StateIndex proper) const { return preimages_[proper]; }
  std::span<const std::size_t> preimage_counts() const noexcept { return preimages_; }
  std::size_t max_multiplicity() const noexcept;

 private:
  std::size_t num_proper_;
  std::vector<StateIndex> image_;
  std::vector<Vertex> repaired_;
  std::vector<std::size_t> preimages_;
};

/// Throws ConfigError unless k >= Δ+2; InvariantViolation if a repair fails.
FlawRepairMap build_flaw_repair_map(const Graph& g, const StateSpace& space);

}  // namespace colorsampler
