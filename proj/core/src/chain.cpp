#include "colorsampler/chain.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

#include "colorsampler/error.hpp"

namespace colorsampler {

std::string_view to_string(ChainKind kind) {
  return kind == ChainKind::SingleFlaw ? "single-flaw" : "glauber";
}

ChainKind parse_chain_kind(std::string_view name) {
  if (name == "single-flaw") return ChainKind::SingleFlaw;
  if (name == "glauber") return ChainKind::Glauber;
  throw std::invalid_argument("unknown chain '" + std::string(name) + "'");
}

void ChainConfig::validate(const Graph& g) const {
  if (k < g.max_degree() + 2)
    throw ConfigError("k=" + std::to_string(k) + " colors is below max degree + 2 = " +
                      std::to_string(g.max_degree() + 2) +
                      "; the chain's state space requires k >= max degree + 2");
}

Coloring apply_single_flaw_move(const Graph& g, const Coloring& sigma, Vertex v, Color c) {
  Coloring next = sigma.recolored(v, c);
  return in_state_space(g, next) ? next : sigma;
}

namespace {

// In-place kernels shared by the single-step API and simulate().
void single_flaw_step_inplace(const Graph& g, int k, Coloring& sigma, Rng& rng) {
  const auto kn = static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(g.num_vertices());
  std::uniform_int_distribution<std::uint64_t> draw(0, 2 * kn - 1);
  const std::uint64_t r = draw(rng);
  if (r < kn) return;
  const auto move = r - kn;
  const auto v = static_cast<Vertex>(move / static_cast<std::uint64_t>(k));
  const auto c = static_cast<Color>(move % static_cast<std::uint64_t>(k)) + 1;
  const Color old = sigma[v];
  if (old == c) return;
  sigma.set(v, c);
  if (!in_state_space(g, sigma)) sigma.set(v, old);
}

void glauber_step_inplace(const Graph& g, int k, Coloring& sigma, Rng& rng) {
  const auto n = static_cast<std::uint64_t>(g.num_vertices());
  std::uniform_int_distribution<std::uint64_t> draw(0, 2 * n - 1);
  const std::uint64_t r = draw(rng);
  if (r < n) return;
  const auto v = static_cast<Vertex>(r - n);
  const auto avail = available_colors(g, sigma, v, k);
  if (avail.empty())
    throw ConfigError("vertex " + std::to_string(v + 1) + " has no available color with k=" +
                      std::to_string(k));
  std::uniform_int_distribution<std::size_t> pick(0, avail.size() - 1);
  sigma.set(v, avail[pick(rng)]);
}

void check_start(const Graph& g, const ChainConfig& cfg, const Coloring& sigma) {
  if (sigma.size() != g.num_vertices() || !sigma.in_range(cfg.k))
    throw std::invalid_argument("coloring does not match the graph or color count");
  if (cfg.kind == ChainKind::SingleFlaw && !in_state_space(g, sigma))
    throw std::invalid_argument("coloring is neither proper nor singly-flawed");
  if (cfg.kind == ChainKind::Glauber && !is_proper(g, sigma))
    throw std::invalid_argument("Glauber dynamics needs a proper coloring");
}

}  // namespace

Coloring single_flaw_step(const Graph& g, const ChainConfig& cfg, const Coloring& sigma, Rng& rng) {
  check_start(g, ChainConfig{cfg.k, ChainKind::SingleFlaw}, sigma);
  Coloring next = sigma;
  if (g.num_vertices() > 0) single_flaw_step_inplace(g, cfg.k, next, rng);
  return next;
}

Coloring glauber_step(const Graph& g, const ChainConfig& cfg, const Coloring& sigma, Rng& rng) {
  check_start(g, ChainConfig{cfg.k, ChainKind::Glauber}, sigma);
  Coloring next = sigma;
  if (g.num_vertices() > 0) glauber_step_inplace(g, cfg.k, next, rng);
  return next;
}

Coloring simulate(const Graph& g, const ChainConfig& cfg, const Coloring& start,
                  std::uint64_t steps, Rng& rng) {
  check_start(g, cfg, start);
  Coloring sigma = start;
  if (g.num_vertices() == 0) return sigma;
  for (std::uint64_t t = 0; t < steps; ++t) {
    if (cfg.kind == ChainKind::SingleFlaw) {
      single_flaw_step_inplace(g, cfg.k, sigma, rng);
      assert(in_state_space(g, sigma));
    } else {
      glauber_step_inplace(g, cfg.k, sigma, rng);
      assert(is_proper(g, sigma));
    }
  }
  return sigma;
}

Coloring simulate(const Graph& g, const ChainConfig& cfg, const Coloring& start,
                  std::uint64_t steps, std::uint64_t seed) {
  Rng rng(seed);
  return simulate(g, cfg, start, steps, rng);
}

}  // namespace colorsampler
