#pragma once

// Brute-force reference implementations used to cross-check the library. They work
// from the raw edge list and share no code with the library beyond the Graph type.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "colorsampler/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<char>>;

inline Matrix adjacency(const colorsampler::Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  Matrix a(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) {
    a[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
    a[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
  }
  return a;
}

enum class Kind { Proper, SinglyFlawed, Invalid };

// Definition-level classification: collect monochromatic edges, look for a vertex
// common to all of them.
inline Kind classify(const colorsampler::Graph& g, const std::vector<int>& sigma) {
  std::vector<std::pair<int, int>> mono;
  for (const auto& e : g.edges())
    if (sigma[static_cast<std::size_t>(e.u)] == sigma[static_cast<std::size_t>(e.v)])
      mono.emplace_back(e.u, e.v);
  if (mono.empty()) return Kind::Proper;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (std::all_of(mono.begin(), mono.end(), [v](auto e) { return e.first == v || e.second == v; }))
      return Kind::SinglyFlawed;
  return Kind::Invalid;
}

// Calls f(sigma) for every coloring in [k]^n, vertex 0 slowest.
template <class F>
void for_each_coloring(int n, int k, F&& f) {
  std::vector<int> sigma(static_cast<std::size_t>(n), 1);
  while (true) {
    f(sigma);
    int i = n - 1;
    while (i >= 0 && sigma[static_cast<std::size_t>(i)] == k) sigma[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) return;
    ++sigma[static_cast<std::size_t>(i)];
  }
}

struct Counts {
  std::uint64_t proper = 0;
  std::uint64_t flawed = 0;
};

inline Counts count_states(const colorsampler::Graph& g, int k) {
  Counts c;
  for_each_coloring(g.num_vertices(), k, [&](const std::vector<int>& s) {
    const Kind kind = classify(g, s);
    c.proper += kind == Kind::Proper;
    c.flawed += kind == Kind::SinglyFlawed;
  });
  return c;
}

inline std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Chromatic polynomials of the standard families.
inline std::int64_t chromatic_path(int n, int k) { return n == 0 ? 1 : k * ipow(k - 1, n - 1); }
inline std::int64_t chromatic_cycle(int n, int k) {
  return ipow(k - 1, n) + (n % 2 == 0 ? 1 : -1) * (k - 1);
}
inline std::int64_t chromatic_complete(int n, int k) {
  std::int64_t r = 1;
  for (int i = 0; i < n; ++i) r *= k - i;
  return r;
}
inline std::int64_t chromatic_star(int leaves, int k) { return k * ipow(k - 1, leaves); }

// Separator size at prefix j of `seq` (0-based positions), straight from the definition.
inline int separator_size(const Matrix& a, const std::vector<int>& seq, int j) {
  int size = 0;
  for (std::size_t later = static_cast<std::size_t>(j); later < seq.size(); ++later) {
    bool touches = false;
    for (int earlier = 0; earlier < j; ++earlier)
      touches = touches || a[static_cast<std::size_t>(seq[later])][static_cast<std::size_t>(seq[static_cast<std::size_t>(earlier)])];
    size += touches;
  }
  return size;
}

inline int order_vsn(const Matrix& a, const std::vector<int>& seq) {
  int best = 0;
  for (int j = 1; j <= static_cast<int>(seq.size()); ++j) best = std::max(best, separator_size(a, seq, j));
  return best;
}

// Minimum over all n! orders.
inline int exhaustive_vsn(const colorsampler::Graph& g) {
  const Matrix a = adjacency(g);
  std::vector<int> seq(static_cast<std::size_t>(g.num_vertices()));
  std::iota(seq.begin(), seq.end(), 0);
  int best = g.num_vertices();
  do best = std::min(best, order_vsn(a, seq));
  while (std::next_permutation(seq.begin(), seq.end()));
  return g.num_vertices() == 0 ? 0 : best;
}

// True when every path from `from` to `to` in g - removed passes through `removed`.
inline bool separates(const Matrix& a, const std::set<int>& from, const std::set<int>& to,
                      const std::set<int>& removed) {
  const int n = static_cast<int>(a.size());
  std::vector<char> seen(a.size(), 0);
  std::queue<int> q;
  for (int v : from)
    if (!removed.count(v)) {
      seen[static_cast<std::size_t>(v)] = 1;
      q.push(v);
    }
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    if (to.count(v)) return false;
    for (int w = 0; w < n; ++w)
      if (a[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)] &&
          !removed.count(w)) {
        seen[static_cast<std::size_t>(w)] = 1;
        q.push(w);
      }
  }
  return true;
}

// Dense double-precision Single-Flaw kernel built from the chain's verbal definition.
// States are indexed by their position in `states`.
inline std::vector<std::vector<double>> dense_single_flaw(const colorsampler::Graph& g, int k,
                                                          const std::vector<std::vector<int>>& states) {
  const std::size_t m = states.size();
  const int n = g.num_vertices();
  std::vector<std::vector<double>> p(m, std::vector<double>(m, 0.0));
  auto find = [&](const std::vector<int>& s) {
    return static_cast<std::size_t>(std::find(states.begin(), states.end(), s) - states.begin());
  };
  const double w = 1.0 / (2.0 * k * n);
  for (std::size_t i = 0; i < m; ++i) {
    p[i][i] += 0.5;
    for (int v = 0; v < n; ++v)
      for (int c = 1; c <= k; ++c) {
        std::vector<int> next = states[i];
        next[static_cast<std::size_t>(v)] = c;
        const std::size_t j = find(next);
        p[i][j < m ? j : i] += w;
      }
  }
  return p;
}

inline std::vector<double> step(const std::vector<double>& mu, const std::vector<std::vector<double>>& p) {
  std::vector<double> out(mu.size(), 0.0);
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t j = 0; j < mu.size(); ++j) out[j] += mu[i] * p[i][j];
  return out;
}

inline double tv_to_uniform(const std::vector<double>& mu) {
  double s = 0.0;
  for (double x : mu) s += std::abs(x - 1.0 / static_cast<double>(mu.size()));
  return 0.5 * s;
}

// Smallest t with max over starts of TV(P^t(s,.), uniform) <= delta, by dense iteration.
inline std::uint64_t dense_mixing_time(const std::vector<std::vector<double>>& p, double delta,
                                       std::uint64_t cap = 100000) {
  const std::size_t m = p.size();
  std::vector<std::vector<double>> rows(m, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < m; ++i) rows[i][i] = 1.0;
  for (std::uint64_t t = 0; t <= cap; ++t) {
    double worst = 0.0;
    for (const auto& r : rows) worst = std::max(worst, tv_to_uniform(r));
    if (worst <= delta + 1e-10) return t;
    for (auto& r : rows) r = step(r, p);
  }
  return cap + 1;
}

}  // namespace oracle
