#pragma once

// Exact desk-scale solvers. Every solver works on 64-bit vertex masks, so the
// hard upper limit on a configurable cap is 64 vertices. Exceeding the cap
// throws Error(too_large); greedy routines are separate and only promise an
// upper bound.

#include <cstddef>
#include <optional>
#include <vector>

#include "coarsetw/decomposition.hpp"
#include "coarsetw/graph.hpp"

namespace coarsetw {

inline constexpr std::size_t kDefaultCap = 20;
inline constexpr std::size_t kTreewidthCap = 16;
inline constexpr std::size_t kMaskLimit = 64;

int exact_chromatic_number(const Graph& g, std::size_t cap = kDefaultCap);

// Lexicographically smallest proper colouring (colours 0..k-1, compared in
// vertex order) using at most k colours, or nullopt if none exists.
std::optional<std::vector<int>> lex_first_coloring(const Graph& g, int k, std::size_t cap = kDefaultCap);

// DSATUR colouring; the number of colours is an upper bound on chi only.
std::vector<int> greedy_coloring(const Graph& g);

int exact_independence_number(const Graph& g, std::size_t cap = kDefaultCap);
VertexSet maximum_independent_set(const Graph& g, std::size_t cap = kDefaultCap);
int exact_clique_number(const Graph& g, std::size_t cap = kDefaultCap);

// Throws Error(empty_set) for the graph with no vertices.
int exact_domination_number(const Graph& g, std::size_t cap = kDefaultCap);
VertexSet minimum_dominating_set(const Graph& g, std::size_t cap = kDefaultCap);

struct TreewidthResult {
  int width = 0;
  std::vector<Vertex> elimination_order;
  TreeDecomposition witness;
};

TreewidthResult exact_treewidth(const Graph& g, std::size_t cap = kTreewidthCap);

}  // namespace coarsetw
