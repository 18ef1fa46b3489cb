#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "colorsampler/coloring.hpp"
#include "colorsampler/graph.hpp"

namespace colorsampler {

enum class ChainKind { SingleFlaw, Glauber };

std::string_view to_string(ChainKind kind);
ChainKind parse_chain_kind(std::string_view name);

/// 64-bit Mersenne twister; the contract is reproducibility for a given seed.
using Rng = std::mt19937_64;

struct ChainConfig {
  int k = 0;
  ChainKind kind = ChainKind::SingleFlaw;

  /// Probability of an idle step. Fixed.
  static constexpr double laziness = 0.5;

  /// Throws ConfigError unless k >= Δ+2.
  void validate(const Graph& g) const;
};

/// Deterministic part of a Single-Flaw move: recolor v with c, keep the result iff
/// it is proper or singly-flawed.
Coloring apply_single_flaw_move(const Graph& g, const Coloring& sigma, Vertex v, Color c);

/// One lazy Single-Flaw step. A single draw over 2kn outcomes: the first kn are
/// idle, the rest encode (v, c). Throws std::invalid_argument if sigma is not in Ω.
Coloring single_flaw_step(const Graph& g, const ChainConfig& cfg, const Coloring& sigma, Rng& rng);

/// One lazy Glauber step: with probability 1/2 idle, otherwise recolor a uniform
/// vertex with a uniform available color. Throws std::invalid_argument if sigma is
/// not proper and ConfigError if the chosen vertex has no available color.
Coloring glauber_step(const Graph& g, const ChainConfig& cfg, const Coloring& sigma, Rng& rng);

/// Runs `steps` steps of the configured chain from `start` with Rng(seed).
Coloring simulate(const Graph& g, const ChainConfig& cfg, const Coloring& start,
                  std::uint64_t steps, std::uint64_t seed);

/// Same, drawing from a caller-owned generator.
Coloring simulate(const Graph& g, const ChainConfig& cfg, const Coloring& start,
                  std::uint64_t steps, Rng& rng);

}  // namespace colorsampler
