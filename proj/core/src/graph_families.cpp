#include "colorsampler/graph_families.hpp"

#include <random>
#include <utility>
#include <vector>

namespace colorsampler::families {

namespace {
using EdgeList = std::vector<std::pair<Vertex, Vertex>>;
}

Graph empty(int n) { return Graph(n, {}); }

Graph path(int n) {
  EdgeList edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  EdgeList edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  if (n >= 3) edges.emplace_back(n - 1, 0);
  return Graph(n, edges);
}

Graph star(int leaves) {
  EdgeList edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

Graph complete(int n) {
  EdgeList edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph grid(int rows, int cols) {
  EdgeList edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph(rows * cols, edges);
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  EdgeList edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

}  // namespace colorsampler::families
