#include "colorsampler/sampler.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <future>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>

#include "colorsampler/chain.hpp"
#include "colorsampler/error.hpp"

namespace colorsampler {

double SamplerParams::delta1(int n) const {
  const double kn1 = static_cast<double>(k) * n + 1.0;
  return delta / (kn1 * kn1);
}

std::uint64_t SamplerParams::max_attempts(int n) const {
  const double kn2 = static_cast<double>(k) * n + 2.0;
  return static_cast<std::uint64_t>(std::ceil(std::log(3.0 / delta) * kn2 * kn2));
}

void SamplerParams::validate(const Graph& g) const {
  if (!(delta > 0.0 && delta < 1.0))
    throw ConfigError("delta must lie in (0, 1), got " + std::to_string(delta));
  ChainConfig{k, ChainKind::SingleFlaw}.validate(g);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t attempt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(attempt), static_cast<std::uint32_t>(attempt >> 32)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

namespace {

Coloring run_attempt(const Graph& g, const ChainConfig& cfg, const Coloring& start,
                     std::uint64_t steps, std::uint64_t seed) {
  return simulate(g, cfg, start, steps, seed);
}

}  // namespace

SampleResult sample_proper_coloring(const Graph& g, const SamplerParams& params) {
  params.validate(g);
  const auto begin = std::chrono::steady_clock::now();
  const ChainConfig cfg{params.k, ChainKind::SingleFlaw};
  const Coloring start = greedy_proper_coloring(g, params.k);
  const std::uint64_t attempts = params.max_attempts(g.num_vertices());

  SampleResult result{start, true, true, attempts, params.steps, params.seed, {}};
  auto accept = [&](Coloring&& sigma, std::uint64_t attempt) {
    result.coloring = std::move(sigma);
    result.fallback = false;
    result.attempts = attempt + 1;
  };

  if (!params.parallel) {
    for (std::uint64_t a = 0; a < attempts; ++a) {
      Coloring sigma = run_attempt(g, cfg, start, params.steps, derive_seed(params.seed, a));
      if (is_proper(g, sigma)) {
        accept(std::move(sigma), a);
        break;
      }
    }
  } else {
    const std::uint64_t batch = std::max<std::uint64_t>(2, std::thread::hardware_concurrency());
    bool done = false;
    for (std::uint64_t first = 0; first < attempts && !done; first += batch) {
      const std::uint64_t last = std::min(attempts, first + batch);
      std::vector<std::future<Coloring>> runs;
      for (std::uint64_t a = first; a < last; ++a)
        runs.push_back(std::async(std::launch::async, run_attempt, std::cref(g), std::cref(cfg),
                                  std::cref(start), params.steps, derive_seed(params.seed, a)));
      for (std::uint64_t a = first; a < last; ++a) {
        Coloring sigma = runs[a - first].get();
        if (!done && is_proper(g, sigma)) {
          accept(std::move(sigma), a);
          done = true;
        }
      }
    }
  }

  if (!is_proper(g, result.coloring)) throw InvariantViolation("sampler produced an improper coloring");
  result.is_proper = true;
  result.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - begin);
  return result;
}

UniformityReport evaluate_uniformity(std::vector<std::uint64_t> counts, double tv_tolerance) {
  if (counts.empty()) throw std::invalid_argument("uniformity test needs at least one outcome");
  UniformityReport r;
  r.counts = std::move(counts);
  r.tv_tolerance = tv_tolerance;
  for (auto c : r.counts) r.trials += c;
  if (r.trials == 0) throw std::invalid_argument("uniformity test needs at least one trial");

  const double m = static_cast<double>(r.counts.size());
  const double n = static_cast<double>(r.trials);
  const double expected = n / m;
  double tv = 0.0;
  double chi = 0.0;
  for (auto c : r.counts) {
    const double x = static_cast<double>(c);
    tv += std::abs(x / n - 1.0 / m);
    chi += (x - expected) * (x - expected) / expected;
  }
  r.tv_to_uniform = 0.5 * tv;
  r.chi_square = chi;
  r.degrees_of_freedom = r.counts.size() - 1;
  r.low_power = r.trials < 10 * r.counts.size();
  if (r.degrees_of_freedom == 0) {
    r.chi_square_critical = 0.0;
    r.pass = r.tv_to_uniform <= tv_tolerance;
  } else {
    boost::math::chi_squared dist(static_cast<double>(r.degrees_of_freedom));
    r.chi_square_critical = boost::math::quantile(dist, 0.99);
    r.pass = r.tv_to_uniform <= tv_tolerance && r.chi_square < r.chi_square_critical;
  }
  return r;
}

UniformityReport uniformity_test(const Graph& g, const SamplerParams& params,
                                 std::uint64_t trials, const StateSpace& space,
                                 double tv_tolerance) {
  params.validate(g);
  if (space.num_vertices() != g.num_vertices() || space.num_colors() != params.k)
    throw std::invalid_argument("state space does not match the graph and k");
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  std::vector<std::uint64_t> counts(space.num_proper(), 0);
  std::uint64_t fallbacks = 0;
  SamplerParams trial = params;
  for (std::uint64_t i = 0; i < trials; ++i) {
    trial.seed = derive_seed(params.seed, i);
    const SampleResult s = sample_proper_coloring(g, trial);
    fallbacks += s.fallback;
    const auto idx = space.index_of(s.coloring);
    assert(idx && space.is_proper(*idx));
    ++counts[*idx];
  }
  UniformityReport r = evaluate_uniformity(std::move(counts), tv_tolerance);
  r.fallbacks = fallbacks;
  return r;
}

}  // namespace colorsampler
