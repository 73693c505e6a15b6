#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coarsetw/graph.hpp"

namespace coarsetw {

// Per-bag exact solvers run on induced bag subgraphs up to this many vertices.
inline constexpr std::size_t kBagCap = 64;

enum class Shape { tree, path };

using TreeEdge = std::pair<int, int>;

// A T-decomposition: tree on nodes 0..bags.size()-1 with a bag per node.
// Path decompositions are the same type with shape == Shape::path.
struct TreeDecomposition {
  Shape shape = Shape::tree;
  std::vector<VertexSet> bags;
  std::vector<TreeEdge> tree_edges;

  std::size_t node_count() const { return bags.size(); }
  std::vector<std::vector<int>> tree_adjacency() const;

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

// Throws Error(malformed_decomposition) unless tree_edges form a tree on the
// bag nodes (a path, for Shape::path).
void check_tree_structure(const TreeDecomposition& td);

enum class Violation { none, vertex_out_of_range, edge_uncovered, vertex_missing, trace_disconnected };

struct ValidationReport {
  Violation violation = Violation::none;
  Edge edge{};          // edge_uncovered
  Vertex vertex = -1;   // vertex_out_of_range, vertex_missing, trace_disconnected
  std::string message;

  bool ok() const { return violation == Violation::none; }
};

// Checks the three decomposition conditions and reports the first violation.
// Structural problems with the tree itself throw Error(malformed_decomposition).
ValidationReport validate_decomposition(const Graph& g, const TreeDecomposition& td);

int width(const TreeDecomposition& td);

struct BagMetric {
  std::size_t size = 0;
  int independence = 0;
  int domination = 0;
};

struct BagMetrics {
  std::vector<BagMetric> bags;

  int independence_number() const;
  int domination_number() const;
  std::size_t max_bag_size() const;
};

// Exact alpha and gamma of every induced bag subgraph. A bag exceeding `cap`
// raises Error(too_large) tagged with the bag index.
BagMetrics bag_metrics(const Graph& g, const TreeDecomposition& td, std::size_t cap = kBagCap);

enum class CentredMode { exact, heuristic };
enum class Verdict { yes, no, unknown };

std::string_view verdict_name(Verdict v);

struct CentredOptions {
  CentredMode mode = CentredMode::exact;
  std::size_t cap = kBagCap;
};

struct CentredResult {
  Verdict verdict = Verdict::unknown;
  std::vector<VertexSet> witness;  // parts, ordered by smallest member

  bool yes() const { return verdict == Verdict::yes; }
};

// Is s partitionable into at most k parts of weak diameter <= d? Decided as
// k-colourability of the complement of the distance-d power graph on s. The
// exact witness is the lexicographically smallest colouring in vertex order;
// heuristic mode never answers `no`.
CentredResult centred_check(const Graph& g, std::span<const Vertex> s, int k, int d,
                            const CentredOptions& options = {});

// Smallest k for which s is (k,d)-centred (0 for an empty set).
int centred_parts(const Graph& g, std::span<const Vertex> s, int d, std::size_t cap = kBagCap);

struct DecompositionCentredResult {
  Verdict verdict = Verdict::yes;
  std::vector<CentredResult> bags;
  std::optional<std::size_t> first_failure;

  bool yes() const { return verdict == Verdict::yes; }
};

DecompositionCentredResult centred_check_decomposition(const Graph& g, const TreeDecomposition& td,
                                                       int k, int d,
                                                       const CentredOptions& options = {});

// Tree decomposition from an elimination ordering (first element eliminated
// first). Width equals the maximum number of later neighbours in the fill graph.
TreeDecomposition decomposition_from_elimination(const Graph& g, std::span<const Vertex> order);

// Same decomposition with node ids permuted by `perm` (new id of node i is
// perm[i]).
TreeDecomposition relabel_nodes(const TreeDecomposition& td, std::span<const int> perm);

}  // namespace coarsetw
