#include "colorsampler/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "colorsampler/error.hpp"

namespace colorsampler {

Graph::Graph(int num_vertices, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(num_vertices));
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices)
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self-loop");
    edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    max_degree_ = std::max(max_degree_, static_cast<int>(nbrs.size()));
  }
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  auto nbrs = neighbors(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

namespace {

bool is_blank_or_comment(std::string_view line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '#';
}

// Splits on blanks and parses every token as a non-negative integer.
std::vector<long long> parse_integers(std::string_view line, std::size_t line_no) {
  std::vector<long long> values;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long long value = 0;
    auto token = line.substr(i, j - i);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
      throw ParseError("expected a non-negative integer, got '" + std::string(token) + "'",
                       line_no);
    values.push_back(value);
    i = j;
  }
  return values;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto next_line = [&](std::string_view& out) {
    while (pos <= text.size()) {
      if (pos == text.size()) return false;
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      out = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (!is_blank_or_comment(out)) return true;
    }
    return false;
  };

  std::string_view line;
  if (!next_line(line)) throw ParseError("missing header line 'n m'", line_no);
  auto header = parse_integers(line, line_no);
  if (header.size() != 2) throw ParseError("header must be 'n m'", line_no);
  const long long n = header[0];
  const long long m = header[1];
  if (n > 1'000'000'000) throw ParseError("vertex count too large", line_no);

  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(std::min<long long>(m, 1'000'000)));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line))
      throw ParseError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(i),
                       line_no);
    auto uv = parse_integers(line, line_no);
    if (uv.size() != 2) throw ParseError("edge line must be 'u v'", line_no);
    if (uv[0] < 1 || uv[0] > n || uv[1] < 1 || uv[1] > n)
      throw ParseError("vertex out of range 1.." + std::to_string(n), line_no);
    if (uv[0] == uv[1]) throw ParseError("self-loop at vertex " + std::to_string(uv[0]), line_no);
    edges.emplace_back(static_cast<Vertex>(uv[0] - 1), static_cast<Vertex>(uv[1] - 1));
  }
  if (next_line(line)) throw ParseError("unexpected content after the edge list", line_no);
  return Graph(static_cast<int>(n), edges);
}

Graph load_graph(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_graph(text);
}

Graph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path.string() + "'");
  return load_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

LinearOrder LinearOrder::identity(int n) {
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 0);
  return from_sequence(std::move(seq));
}

LinearOrder LinearOrder::from_sequence(std::vector<Vertex> sequence) {
  LinearOrder order;
  const auto n = sequence.size();
  order.rank_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = sequence[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n || order.rank_[static_cast<std::size_t>(v)] != 0)
      throw std::invalid_argument("linear order is not a permutation");
    order.rank_[static_cast<std::size_t>(v)] = static_cast<int>(i) + 1;
  }
  order.sequence_ = std::move(sequence);
  return order;
}

LinearOrder parse_order(std::string_view text, int n) {
  std::vector<Vertex> seq;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    long long label = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), label);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("order entry '" + token + "' is not an integer", 0);
    if (label < 1 || label > n)
      throw ParseError("order entry " + token + " out of range 1.." + std::to_string(n), 0);
    seq.push_back(static_cast<Vertex>(label - 1));
  }
  if (static_cast<int>(seq.size()) != n)
    throw ParseError("order has " + std::to_string(seq.size()) + " entries, expected " +
                         std::to_string(n),
                     0);
  try {
    return LinearOrder::from_sequence(std::move(seq));
  } catch (const std::invalid_argument&) {
    throw ParseError("order repeats a vertex", 0);
  }
}

LinearOrder load_order_file(const std::filesystem::path& path, int n) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open order file '" + path.string() + "'");
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_order(text, n);
}

}  // namespace colorsampler
