#include "colorsampler/transition_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "colorsampler/error.hpp"

namespace colorsampler {

TransitionMatrix::TransitionMatrix(std::int64_t denominator, std::vector<std::vector<Entry>> rows)
    : denominator_(denominator), rows_(std::move(rows)) {
  if (denominator_ <= 0) throw std::invalid_argument("denominator must be positive");
  for (auto& row : rows_)
    std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.column < b.column; });
}

std::int64_t TransitionMatrix::numerator(std::size_t i, std::size_t j) const {
  const auto& r = rows_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j,
                             [](const Entry& e, std::size_t col) { return e.column < col; });
  return (it != r.end() && it->column == j) ? it->numerator : 0;
}

Rational TransitionMatrix::entry(std::size_t i, std::size_t j) const {
  Rational r(numerator(i, j), denominator_);
  r.canonicalize();
  return r;
}

double TransitionMatrix::probability(std::size_t i, std::size_t j) const {
  return static_cast<double>(numerator(i, j)) / static_cast<double>(denominator_);
}

bool TransitionMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const Entry& e : rows_[i])
      if (numerator(e.column, i) != e.numerator) return false;
  return true;
}

bool TransitionMatrix::rows_sum_to_one() const {
  return std::all_of(rows_.begin(), rows_.end(), [this](const auto& row) {
    std::int64_t sum = 0;
    for (const Entry& e : row) {
      if (e.numerator < 0) return false;
      sum += e.numerator;
    }
    return sum == denominator_;
  });
}

bool TransitionMatrix::uniform_is_stationary() const {
  std::vector<std::int64_t> column_sums(rows_.size(), 0);
  for (const auto& row : rows_)
    for (const Entry& e : row) column_sums[e.column] += e.numerator;
  return std::all_of(column_sums.begin(), column_sums.end(),
                     [this](std::int64_t s) { return s == denominator_; });
}

bool TransitionMatrix::is_lazy() const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (2 * numerator(i, i) < denominator_) return false;
  return true;
}

bool TransitionMatrix::is_irreducible() const {
  const std::size_t n = rows_.size();
  if (n == 0) return true;
  // Forward reachability from 0 on P and on its transpose.
  auto reaches_all = [&](const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (auto w : adj[u])
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
    }
    return count == n;
  };
  std::vector<std::vector<std::size_t>> fwd(n), bwd(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const Entry& e : rows_[i])
      if (e.numerator > 0) {
        fwd[i].push_back(e.column);
        bwd[e.column].push_back(i);
      }
  return reaches_all(fwd) && reaches_all(bwd);
}

void TransitionMatrix::propagate(std::span<const double> in, std::span<double> out) const {
  if (in.size() != rows_.size() || out.size() != rows_.size())
    throw std::invalid_argument("distribution size does not match the matrix");
  std::fill(out.begin(), out.end(), 0.0);
  const double scale = 1.0 / static_cast<double>(denominator_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (in[i] == 0.0) continue;
    const double mass = in[i] * scale;
    for (const Entry& e : rows_[i]) out[e.column] += mass * static_cast<double>(e.numerator);
  }
}

namespace {

std::int64_t lcm_upto(int k) {
  std::int64_t l = 1;
  for (int i = 2; i <= k; ++i) {
    const std::int64_t next = std::lcm(l, static_cast<std::int64_t>(i));
    if (next / i > std::numeric_limits<std::int64_t>::max() / (1 << 20))
      throw ConfigError("too many colors for an exact Glauber matrix");
    l = next;
  }
  return l;
}

}  // namespace

TransitionMatrix build_transition_matrix(const Graph& g, const ChainConfig& cfg,
                                         const StateSpace& space, std::size_t budget) {
  cfg.validate(g);
  if (space.num_colors() != cfg.k || space.num_vertices() != g.num_vertices())
    throw std::invalid_argument("state space does not match the chain configuration");
  const int n = g.num_vertices();
  const int k = cfg.k;
  const bool glauber = cfg.kind == ChainKind::Glauber;
  const std::size_t dim = glauber ? space.num_proper() : space.size();
  if (dim > budget)
    throw BudgetExceeded("transition matrix over " + std::to_string(dim) +
                         " states exceeds the budget of " + std::to_string(budget));

  const std::int64_t color_lcm = glauber ? lcm_upto(k) : 1;
  const std::int64_t denominator =
      glauber ? 2 * static_cast<std::int64_t>(n) * color_lcm : 2 * static_cast<std::int64_t>(k) * n;

  std::vector<std::vector<TransitionMatrix::Entry>> rows(dim);
  for (StateIndex i = 0; i < dim; ++i) {
    const Coloring sigma = space.state(i);
    std::map<std::size_t, std::int64_t> row;
    std::int64_t moved = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (glauber) {
        const auto avail = available_colors(g, sigma, v, k);
        const std::int64_t weight = color_lcm / static_cast<std::int64_t>(avail.size());
        for (Color c : avail) {
          if (c == sigma[v]) continue;
          const auto j = space.index_of(sigma.recolored(v, c));
          if (!j || !space.is_proper(*j)) throw InvariantViolation("Glauber move left C_p");
          row[*j] += weight;
          moved += weight;
        }
      } else {
        for (Color c = 1; c <= k; ++c) {
          if (c == sigma[v]) continue;
          const auto j = space.index_of(sigma.recolored(v, c));
          if (!j) continue;  // rejected move: stays put
          row[*j] += 1;
          moved += 1;
        }
      }
    }
    row[i] += denominator - moved;
    auto& out = rows[i];
    out.reserve(row.size());
    for (auto [col, num] : row) out.push_back({col, num});
  }
  return TransitionMatrix(denominator, std::move(rows));
}

double tv_distance(std::span<const double> mu, std::span<const double> nu) {
  if (mu.size() != nu.size()) throw std::invalid_argument("tv_distance: dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) sum += std::abs(mu[i] - nu[i]);
  return 0.5 * sum;
}

MixingTime exact_mixing_time(const TransitionMatrix& p, double delta, std::uint64_t iteration_cap) {
  const std::size_t dim = p.dimension();
  if (dim == 0) throw std::invalid_argument("empty transition matrix");
  if (!p.is_irreducible()) throw ConfigError("chain is not irreducible");
  if (!p.is_lazy()) throw ConfigError("chain is not lazy (aperiodicity not guaranteed)");

  const std::vector<double> uniform(dim, 1.0 / static_cast<double>(dim));
  std::vector<double> dist(dim), next(dim);
  MixingTime result;
  for (std::size_t start = 0; start < dim; ++start) {
    std::fill(dist.begin(), dist.end(), 0.0);
    dist[start] = 1.0;
    std::uint64_t t = 0;
    double tv = tv_distance(dist, uniform);
    while (tv > delta + kTvSlack) {
      if (++t > iteration_cap)
        throw Error("mixing time did not reach delta=" + std::to_string(delta) + " within " +
                    std::to_string(iteration_cap) + " steps from state " + std::to_string(start) +
                    " (last TV " + std::to_string(tv) + ")");
      p.propagate(dist, next);
      dist.swap(next);
      tv = tv_distance(dist, uniform);
    }
    // TV to stationarity cannot increase; confirm on a few further steps anyway.
    std::vector<double> probe = dist;
    for (int extra = 0; extra < 10; ++extra) {
      p.propagate(probe, next);
      probe.swap(next);
      if (tv_distance(probe, uniform) > delta + kTvSlack)
        throw InvariantViolation("TV distance rose above delta after first crossing");
    }
    if (start == 0 || t > result.steps) {
      result.steps = t;
      result.worst_start = start;
      result.tv_at_steps = tv;
    }
  }
  return result;
}

double congestion_bound_main(int n, int max_degree, int k, int pathwidth, double lambda) {
  if (k < max_degree + 2) throw ConfigError("bound requires k >= max degree + 2");
  const double kk = k;
  const double ratio = kk / static_cast<double>(k - max_degree);
  const double log_n = n > 0 ? std::log2(static_cast<double>(n)) : 0.0;
  return 8.0 * kk * kk * kk * (lambda + 1.0) * std::pow(static_cast<double>(n), 5) * log_n *
         std::pow(ratio, 2.0 * pathwidth);
}

double theoretical_tau_bound(int n, int max_degree, int k, int pathwidth, double lambda,
                             double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  const double rho = congestion_bound_main(n, max_degree, k, pathwidth, lambda);
  return rho * (static_cast<double>(n) * std::log(static_cast<double>(k)) + std::log(1.0 / delta));
}

}  // namespace colorsampler
