#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "colorsampler/chain.hpp"
#include "colorsampler/rational.hpp"
#include "colorsampler/state_space.hpp"

namespace colorsampler {

inline constexpr std::size_t kDefaultMatrixBudget = 20'000;

/// Exact sparse transition matrix. Every entry is numerator / denominator() with
/// a common integer denominator (2kn for Single-Flaw, 2n·lcm(1..k) for Glauber), so
/// symmetry, row sums and stationarity can be checked with integer arithmetic.
///
/// Rows are indexed by StateIndex. For Glauber the matrix covers C_p only, which is
/// the prefix [0, num_proper()) of the state space.
class TransitionMatrix {
 public:
  struct Entry {
    std::size_t column;
    std::int64_t numerator;
  };

  TransitionMatrix(std::int64_t denominator, std::vector<std::vector<Entry>> rows);

  std::size_t dimension() const noexcept { return rows_.size(); }
  std::int64_t denominator() const noexcept { return denominator_; }
  /// Nonzero entries of row i sorted by column, diagonal included.
  std::span<const Entry> row(std::size_t i) const { return rows_[i]; }

  std::int64_t numerator(std::size_t i, std::size_t j) const;
  Rational entry(std::size_t i, std::size_t j) const;
  double probability(std::size_t i, std::size_t j) const;

  bool is_symmetric() const;
  bool rows_sum_to_one() const;
  /// uniform · P == uniform, i.e. every column sums to one.
  bool uniform_is_stationary() const;
  /// Every diagonal entry is at least 1/2.
  bool is_lazy() const;
  /// Strong connectivity of the support graph.
  bool is_irreducible() const;

  /// One step of distribution propagation: out = in · P.
  void propagate(std::span<const double> in, std::span<double> out) const;

 private:
  std::int64_t denominator_;
  std::vector<std::vector<Entry>> rows_;
};

/// Throws ConfigError for k < Δ+2 and BudgetExceeded when the chain's state
/// space exceeds `budget`.
TransitionMatrix build_transition_matrix(const Graph& g, const ChainConfig& cfg,
                                         const StateSpace& space,
                                         std::size_t budget = kDefaultMatrixBudget);

/// (1/2) Σ |mu_i - nu_i|. Throws std::invalid_argument on a size mismatch.
double tv_distance(std::span<const double> mu, std::span<const double> nu);

struct MixingTime {
  std::uint64_t steps = 0;
  /// Start state attaining the maximum.
  std::size_t worst_start = 0;
  /// Worst-case TV distance to uniform after `steps` steps.
  double tv_at_steps = 0.0;
};

inline constexpr double kTvSlack = 1e-10;
inline constexpr std::uint64_t kDefaultMixingIterationCap = 10'000'000;

/// Smallest t such that max_start TV(P^t(start, ·), uniform) <= delta for all
/// later times. Comparisons allow kTvSlack. Throws ConfigError if P is not
/// irreducible or not lazy, and Error when the cap is reached.
MixingTime exact_mixing_time(const TransitionMatrix& p, double delta,
                             std::uint64_t iteration_cap = kDefaultMixingIterationCap);

/// Congestion bound rho = 8 k^3 (lambda+1) n^5 log2(n) (k/(k-Δ))^(2 pw) combined
/// with tau <= rho (n ln k + ln(1/delta)). Throws ConfigError unless k >= Δ+2.
double congestion_bound_main(int n, int max_degree, int k, int pathwidth, double lambda);
double theoretical_tau_bound(int n, int max_degree, int k, int pathwidth, double lambda,
                             double delta);

}  // namespace colorsampler
