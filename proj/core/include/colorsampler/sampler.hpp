#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "colorsampler/coloring.hpp"
#include "colorsampler/graph.hpp"
#include "colorsampler/state_space.hpp"

namespace colorsampler {

/// Parameters of the almost-uniform sampler.
struct SamplerParams {
  int k = 0;
  /// Bias parameter, in (0, 1).
  double delta = 0.05;
  /// Chain steps per attempt. Usually the mixing time for delta1().
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;
  /// Run attempts concurrently in batches. Attempt seeds are derived from
  /// (seed, attempt), so the result does not depend on this flag.
  bool parallel = false;

  /// delta / (kn+1)^2
  double delta1(int n) const;
  /// ceil(ln(3/delta) (kn+2)^2)
  std::uint64_t max_attempts(int n) const;

  /// Throws ConfigError on delta outside (0,1) or k < Δ+2.
  void validate(const Graph& g) const;
};

struct SampleResult {
  Coloring coloring;
  /// Always true; asserted before returning.
  bool is_proper = true;
  /// True when every attempt ended improper and the greedy coloring was returned.
  bool fallback = false;
  std::uint64_t attempts = 0;
  std::uint64_t steps_per_attempt = 0;
  std::uint64_t seed = 0;
  std::chrono::nanoseconds wall_time{0};
};

/// Seed of attempt `attempt` (0-based) for base seed `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t attempt);

/// Up to T runs of the Single-Flaw chain from the greedy proper coloring; returns
/// the first run whose final state is proper, else the greedy coloring.
SampleResult sample_proper_coloring(const Graph& g, const SamplerParams& params);

struct UniformityReport {
  std::uint64_t trials = 0;
  std::vector<std::uint64_t> counts;  // indexed like the proper block of the space
  double tv_to_uniform = 0.0;
  double chi_square = 0.0;
  std::uint64_t degrees_of_freedom = 0;
  double chi_square_critical = 0.0;  // 99th percentile
  double tv_tolerance = 0.0;
  std::uint64_t fallbacks = 0;
  bool low_power = false;
  bool pass = false;
};

inline constexpr double kDefaultUniformityTolerance = 0.02;

/// Scores tallies over C_p against the uniform distribution: empirical TV and a
/// chi-square statistic with |C_p|-1 degrees of freedom at the 99% level.
UniformityReport evaluate_uniformity(std::vector<std::uint64_t> counts,
                                     double tv_tolerance = kDefaultUniformityTolerance);

/// Runs the sampler `trials` times (trial i uses derive_seed(params.seed, i) as its
/// base seed) and scores the tallies. Sets `low_power` when trials < 10 |C_p|.
UniformityReport uniformity_test(const Graph& g, const SamplerParams& params,
                                 std::uint64_t trials, const StateSpace& space,
                                 double tv_tolerance = kDefaultUniformityTolerance);

}  // namespace colorsampler
