#pragma once

#include <cstdint>

#include "colorsampler/graph.hpp"

// Small named graph families used by the test corpus, benchmarks and examples.
namespace colorsampler::families {

Graph empty(int n);
Graph path(int n);
Graph cycle(int n);
/// Vertex 0 is the center, 1..leaves are the leaves.
Graph star(int leaves);
Graph complete(int n);
Graph grid(int rows, int cols);
/// G(n, p) with a fixed seed; deterministic for a given (n, p, seed).
Graph random_gnp(int n, double p, std::uint64_t seed);

}  // namespace colorsampler::families
