#pragma once

// Seeded instance generators for tests and the `gen` subcommand. All
// randomness flows through an explicitly passed Rng.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "coarsetw/decomposition.hpp"
#include "coarsetw/graph.hpp"
#include "coarsetw/quasiiso.hpp"
#include "coarsetw/simwidth.hpp"

namespace coarsetw::gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform-ish index in [0, n). Plain modulo over mt19937_64 keeps the
  // stream identical across standard libraries, unlike the std distributions.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool coin() { return (engine_() & 1U) != 0; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

enum class Family {
  path,
  cycle,
  random_tree,
  k_tree,
  k_path,
  subdivided_k_tree,
  grid_slice,
  random_graph,
  random_branch_decomposition,
};

std::optional<Family> family_from_name(std::string_view name);
std::string_view family_name(Family f);

struct Params {
  std::size_t n = 10;
  int k = 2;
  int s = 1;       // subdivisions per edge
  std::size_t rows = 3;
  double p = 0.3;  // edge probability for random graphs
};

struct Instance {
  Graph graph;
  std::optional<TreeDecomposition> td;
  std::optional<BranchDecomposition> bd;
  // subdivided_k_tree: the base k-tree, its decomposition and the map from
  // graph to base (each subdivision vertex to its nearest branch endpoint).
  std::optional<Graph> base;
  std::optional<TreeDecomposition> base_td;
  std::optional<QuasiIsometryMap> map;
  int known_constant = 0;  // s + 1 for subdivided_k_tree
};

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

Instance path_instance(std::size_t n);
Instance cycle_instance(std::size_t n);
Instance random_tree(std::size_t n, Rng& rng);
// Random k-tree (n >= k+1) with its natural width-k decomposition.
Instance k_tree(int k, std::size_t n, Rng& rng);
// k-tree grown along a path, with its natural width-k path decomposition.
Instance k_path(int k, std::size_t n, Rng& rng);
Instance subdivided_k_tree(int k, std::size_t n, int s, Rng& rng);
Instance grid_slice(std::size_t rows, std::size_t cols);
// G(n,p) conditioned on nothing; may be disconnected.
Instance random_graph(std::size_t n, double p, Rng& rng);

Instance generate(Family family, const Params& params, Rng& rng);

// Random subcubic tree with the vertices of g on its leaves.
BranchDecomposition random_branch_decomposition(const Graph& g, Rng& rng);

// Contracts `merges` random tree edges, merging their bags. Path shape is kept.
TreeDecomposition coarsen(const TreeDecomposition& td, std::size_t merges, Rng& rng);

}  // namespace coarsetw::gen
