#include "colorsampler/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "colorsampler/error.hpp"

namespace colorsampler {

Coloring Coloring::recolored(Vertex v, Color c) const {
  Coloring out = *this;
  out.set(v, c);
  return out;
}

bool Coloring::in_range(int k) const {
  return std::all_of(colors_.begin(), colors_.end(), [k](Color c) { return c >= 1 && c <= k; });
}

std::string format_coloring(const Coloring& sigma) {
  std::string out;
  for (int v = 0; v < sigma.size(); ++v) {
    if (v) out += ' ';
    out += std::to_string(sigma[v]);
  }
  return out;
}

Coloring parse_coloring(std::string_view text) {
  std::vector<Color> colors;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 1)
      throw ParseError("invalid color '" + token + "'", 0);
    colors.push_back(value);
  }
  return Coloring(std::move(colors));
}

std::string_view to_string(ColoringKind kind) {
  switch (kind) {
    case ColoringKind::Proper: return "proper";
    case ColoringKind::SinglyFlawed: return "singly-flawed";
    case ColoringKind::Invalid: return "invalid";
  }
  return "unknown";
}

std::vector<Edge> monochromatic_edges(const Graph& g, const Coloring& sigma) {
  std::vector<Edge> mono;
  for (const Edge& e : g.edges())
    if (sigma[e.u] == sigma[e.v]) mono.push_back(e);
  return mono;
}

namespace {

// Walks the monochromatic edges once, keeping the candidate vertices that lie on
// every edge seen so far. Returns the survivors as a two-bit mask over (a, b) of the
// first monochromatic edge; `any` reports whether one exists.
struct FlawScan {
  bool any = false;
  Edge first{};
  bool keep_u = false;
  bool keep_v = false;
};

FlawScan scan_flaws(const Graph& g, const Coloring& sigma) {
  FlawScan scan;
  for (const Edge& e : g.edges()) {
    if (sigma[e.u] != sigma[e.v]) continue;
    if (!scan.any) {
      scan.any = true;
      scan.first = e;
      scan.keep_u = scan.keep_v = true;
      continue;
    }
    scan.keep_u = scan.keep_u && (e.u == scan.first.u || e.v == scan.first.u);
    scan.keep_v = scan.keep_v && (e.u == scan.first.v || e.v == scan.first.v);
    if (!scan.keep_u && !scan.keep_v) break;
  }
  return scan;
}

}  // namespace

ColoringClass classify(const Graph& g, const Coloring& sigma) {
  const FlawScan scan = scan_flaws(g, sigma);
  if (!scan.any) return {ColoringKind::Proper, {}};
  if (!scan.keep_u && !scan.keep_v) return {ColoringKind::Invalid, {}};
  ColoringClass out{ColoringKind::SinglyFlawed, {}};
  if (scan.keep_u) out.flawed_vertices.push_back(scan.first.u);
  if (scan.keep_v) out.flawed_vertices.push_back(scan.first.v);
  return out;
}

bool in_state_space(const Graph& g, const Coloring& sigma) {
  const FlawScan scan = scan_flaws(g, sigma);
  return !scan.any || scan.keep_u || scan.keep_v;
}

bool is_proper(const Graph& g, const Coloring& sigma) {
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return sigma[e.u] == sigma[e.v]; });
}

std::vector<Color> available_colors(const Graph& g, const Coloring& sigma, Vertex v, int k) {
  std::vector<char> used(static_cast<std::size_t>(k) + 1, 0);
  for (Vertex w : g.neighbors(v)) {
    const Color c = sigma[w];
    if (c >= 1 && c <= k) used[static_cast<std::size_t>(c)] = 1;
  }
  std::vector<Color> out;
  for (Color c = 1; c <= k; ++c)
    if (!used[static_cast<std::size_t>(c)]) out.push_back(c);
  return out;
}

Coloring greedy_proper_coloring(const Graph& g, int k) {
  if (k < g.max_degree() + 1)
    throw ConfigError("greedy coloring needs k >= max degree + 1 (k=" + std::to_string(k) +
                      ", max degree=" + std::to_string(g.max_degree()) + ")");
  Coloring sigma(std::vector<Color>(static_cast<std::size_t>(g.num_vertices()), 0));
  for (Vertex v = 0; v < g.num_vertices(); ++v) sigma.set(v, available_colors(g, sigma, v, k).front());
  return sigma;
}

Color chi_recolor(std::span<const Color> available, int k, Color c) {
  if (available.empty()) throw std::invalid_argument("chi_recolor: empty color set");
  if (c < 1 || c > k) throw std::invalid_argument("chi_recolor: color out of range");
  std::vector<Color> sorted(available.begin(), available.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted[static_cast<std::size_t>(c - 1) % sorted.size()];
}

}  // namespace colorsampler
