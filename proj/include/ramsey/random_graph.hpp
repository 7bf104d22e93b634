#pragma once

#include <cstdint>

#include "ramsey/coloured_graph.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// G(n, p). Draws one Bernoulli(p) per pair from Rng(seed) in row-major
/// order (u ascending, then v > u ascending).
Graph sample_gnp(int n, double p, std::uint64_t seed);

/// Uniform random labelled tree on n vertices (random Prüfer sequence).
Graph random_tree(int n, std::uint64_t seed);

/// Random forest: random_tree(n) with each edge kept with probability keep.
Graph random_forest(int n, double keep, std::uint64_t seed);

/// Uniform q-colouring of every edge of g, in edge order.
ColouredGraph random_colouring(const Graph& g, int q, std::uint64_t seed);

} // namespace ramsey
