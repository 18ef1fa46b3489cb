#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "colorsampler/graph.hpp"

namespace colorsampler {

/// Color value in 1..k.
using Color = int;

/// Assignment of a color in 1..k to every vertex.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {}

  int size() const noexcept { return static_cast<int>(colors_.size()); }
  Color operator[](Vertex v) const { return colors_[static_cast<std::size_t>(v)]; }
  std::span<const Color> colors() const noexcept { return colors_; }

  void set(Vertex v, Color c) { colors_[static_cast<std::size_t>(v)] = c; }
  /// Copy with `v` recolored to `c`.
  Coloring recolored(Vertex v, Color c) const;

  /// True when every entry lies in 1..k.
  bool in_range(int k) const;

  auto operator<=>(const Coloring&) const = default;
  bool operator==(const Coloring&) const = default;

 private:
  std::vector<Color> colors_;
};

/// Whitespace-separated colors in vertex order.
std::string format_coloring(const Coloring& sigma);
Coloring parse_coloring(std::string_view text);

enum class ColoringKind { Proper, SinglyFlawed, Invalid };

std::string_view to_string(ColoringKind kind);

struct ColoringClass {
  ColoringKind kind = ColoringKind::Invalid;
  /// Vertices lying on every monochromatic edge; empty unless SinglyFlawed.
  std::vector<Vertex> flawed_vertices;
};

std::vector<Edge> monochromatic_edges(const Graph& g, const Coloring& sigma);

ColoringClass classify(const Graph& g, const Coloring& sigma);

/// Allocation-free membership test for Ω = proper ∪ singly-flawed.
bool in_state_space(const Graph& g, const Coloring& sigma);
bool is_proper(const Graph& g, const Coloring& sigma);

/// Colors in 1..k held by no neighbor of `v`, ascending. Ignores sigma(v) itself.
std::vector<Color> available_colors(const Graph& g, const Coloring& sigma, Vertex v, int k);

/// Colors vertices in label order with the smallest available color.
/// Throws ConfigError when k < Δ+1.
Coloring greedy_proper_coloring(const Graph& g, int k);

/// Balanced recoloring map onto `available`: sorts it ascending and returns
/// available[(c-1) mod |available|]. Every member receives floor(k/|C|) or
/// ceil(k/|C|) pre-images from 1..k. Throws std::invalid_argument on an empty set
/// or c outside 1..k.
Color chi_recolor(std::span<const Color> available, int k, Color c);

}  // namespace colorsampler
