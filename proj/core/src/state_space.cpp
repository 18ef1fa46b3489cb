#include "colorsampler/state_space.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "colorsampler/error.hpp"

namespace colorsampler {

StateSpace::StateSpace(int num_vertices, int k, std::vector<std::uint64_t> proper_codes,
                       std::vector<std::uint64_t> flawed_codes)
    : n_(num_vertices), k_(k), num_proper_(proper_codes.size()) {
  std::sort(proper_codes.begin(), proper_codes.end());
  std::sort(flawed_codes.begin(), flawed_codes.end());
  if (std::adjacent_find(proper_codes.begin(), proper_codes.end()) != proper_codes.end() ||
      std::adjacent_find(flawed_codes.begin(), flawed_codes.end()) != flawed_codes.end())
    throw std::invalid_argument("state space lists must be duplicate-free");
  codes_ = std::move(proper_codes);
  codes_.insert(codes_.end(), flawed_codes.begin(), flawed_codes.end());

  place_.assign(static_cast<std::size_t>(n_), 1);
  for (int v = n_ - 2; v >= 0; --v)
    place_[static_cast<std::size_t>(v)] =
        place_[static_cast<std::size_t>(v) + 1] * static_cast<std::uint64_t>(k_);
}

std::uint64_t StateSpace::encode(const Coloring& sigma) const {
  std::uint64_t code = 0;
  for (Vertex v = 0; v < n_; ++v) code = code * static_cast<std::uint64_t>(k_) + static_cast<std::uint64_t>(sigma[v] - 1);
  return code;
}

Coloring StateSpace::decode(std::uint64_t code) const {
  std::vector<Color> colors(static_cast<std::size_t>(n_));
  for (int v = n_ - 1; v >= 0; --v) {
    colors[static_cast<std::size_t>(v)] = static_cast<Color>(code % static_cast<std::uint64_t>(k_)) + 1;
    code /= static_cast<std::uint64_t>(k_);
  }
  return Coloring(std::move(colors));
}

std::optional<StateIndex> StateSpace::index_of_code(std::uint64_t code) const {
  auto search = [&](auto first, auto last) -> std::optional<StateIndex> {
    auto it = std::lower_bound(first, last, code);
    if (it != last && *it == code) return static_cast<StateIndex>(it - codes_.begin());
    return std::nullopt;
  };
  const auto mid = codes_.begin() + static_cast<std::ptrdiff_t>(num_proper_);
  if (auto hit = search(codes_.begin(), mid)) return hit;
  return search(mid, codes_.end());
}

std::optional<StateIndex> StateSpace::index_of(const Coloring& sigma) const {
  if (sigma.size() != n_ || !sigma.in_range(k_)) return std::nullopt;
  return index_of_code(encode(sigma));
}

StateSpace enumerate_states(const Graph& g, int k, std::uint64_t budget) {
  const int n = g.num_vertices();
  if (k < 1) throw ConfigError("need at least one color");
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > budget / static_cast<std::uint64_t>(k))
      throw BudgetExceeded("enumerating " + std::to_string(k) + "^" + std::to_string(n) +
                           " colorings exceeds the budget of " + std::to_string(budget));
    total *= static_cast<std::uint64_t>(k);
  }

  std::vector<std::uint64_t> proper;
  std::vector<std::uint64_t> flawed;
  Coloring sigma(std::vector<Color>(static_cast<std::size_t>(n), 1));
  for (std::uint64_t code = 0; code < total; ++code) {
    if (is_proper(g, sigma))
      proper.push_back(code);
    else if (in_state_space(g, sigma))
      flawed.push_back(code);
    // Odometer increment, last vertex least significant.
    for (int v = n - 1; v >= 0; --v) {
      if (sigma[v] < k) {
        sigma.set(v, sigma[v] + 1);
        break;
      }
      sigma.set(v, 1);
    }
  }
  return StateSpace(n, k, std::move(proper), std::move(flawed));
}

FlawRepairMap::FlawRepairMap(std::vector<StateIndex> image, std::vector<Vertex> repaired_vertex,
                             std::size_t num_proper)
    : num_proper_(num_proper),
      image_(std::move(image)),
      repaired_(std::move(repaired_vertex)),
      preimages_(num_proper, 0) {
  for (StateIndex target : image_) {
    if (target >= num_proper_) throw std::invalid_argument("g' must map onto proper colorings");
    ++preimages_[target];
  }
}

StateIndex FlawRepairMap::image(StateIndex flawed) const {
  if (flawed < num_proper_ || flawed - num_proper_ >= image_.size())
    throw std::out_of_range("not a singly-flawed state index");
  return image_[flawed - num_proper_];
}

Vertex FlawRepairMap::repaired_vertex(StateIndex flawed) const {
  if (flawed < num_proper_ || flawed - num_proper_ >= repaired_.size())
    throw std::out_of_range("not a singly-flawed state index");
  return repaired_[flawed - num_proper_];
}

std::size_t FlawRepairMap::max_multiplicity() const noexcept {
  return preimages_.empty() ? 0 : *std::max_element(preimages_.begin(), preimages_.end());
}

FlawRepairMap build_flaw_repair_map(const Graph& g, const StateSpace& space) {
  const int k = space.num_colors();
  if (k < g.max_degree() + 2)
    throw ConfigError("flaw repair needs k >= max degree + 2");
  std::vector<StateIndex> image;
  std::vector<Vertex> repaired;
  image.reserve(space.num_singly_flawed());
  repaired.reserve(space.num_singly_flawed());
  for (StateIndex i = space.num_proper(); i < space.size(); ++i) {
    const Coloring sigma = space.state(i);
    const ColoringClass cls = classify(g, sigma);
    if (cls.kind != ColoringKind::SinglyFlawed)
      throw InvariantViolation("state " + std::to_string(i) + " is not singly-flawed");
    const Vertex v = *std::min_element(cls.flawed_vertices.begin(), cls.flawed_vertices.end());
    const auto avail = available_colors(g, sigma, v, k);
    if (avail.empty()) throw InvariantViolation("flawed vertex has no available color");
    const Coloring fixed = sigma.recolored(v, avail.front());
    const auto target = space.index_of(fixed);
    if (!target || !space.is_proper(*target))
      throw InvariantViolation("repairing a flawed vertex did not give a proper coloring");
    image.push_back(*target);
    repaired.push_back(v);
  }
  return FlawRepairMap(std::move(image), std::move(repaired), space.num_proper());
}

}  // namespace colorsampler
