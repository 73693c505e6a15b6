#pragma once

// Forward direction: a (k,d)-centred decomposition of g is turned into a
// decomposition of width <= 2k-1 of a graph quasi-isometric to g.
//
//   g --identity--> g1 (augment: bag-sharing pairs at distance <= d joined)
//     --v->part--> g2 (quotient by a partition with bipartite quotient)
//
// Decompositions travel along unchanged (augment) or pushed to parts
// (push_decomposition), so the tree and its shape are preserved.

#include <optional>
#include <vector>

#include "coarsetw/checks.hpp"
#include "coarsetw/decomposition.hpp"
#include "coarsetw/graph.hpp"
#include "coarsetw/quasiiso.hpp"

namespace coarsetw {

// Disjoint non-empty vertex sets covering V(g), ordered by smallest member.
struct Partition {
  std::vector<VertexSet> parts;
  std::vector<int> part_of;

  // Throws Error(invalid_partition) unless parts are non-empty, disjoint and
  // cover 0..n-1. Parts are normalised and reordered.
  static Partition from_parts(std::size_t n, std::vector<VertexSet> parts);
  static Partition singletons(std::size_t n);

  std::size_t size() const { return parts.size(); }
};

// Throws Error(invalid_partition) if p does not cover g or a part induces a
// disconnected subgraph.
void validate_partition(const Graph& g, const Partition& p);

// Largest weak diameter over parts (0 for an empty partition).
Distance max_part_diameter(const Graph& g, const Partition& p);

struct Augmented {
  Graph graph;
  QuasiIsometryMap map;  // identity g -> graph
  TreeDecomposition td;  // unchanged; valid for `graph`
  std::vector<Edge> added;
};

Augmented augment(const Graph& g, const TreeDecomposition& td, int d);

Graph quotient(const Graph& g, const Partition& p);

// v -> part(v), with measured constant. Every part must have weak diameter
// < d, otherwise Error(diameter_exceeded) with the part index as value().
QuasiIsometryMap quotient_map(const Graph& g, const Partition& p, int d);

TreeDecomposition push_decomposition(const Graph& g, const TreeDecomposition& td, const Partition& p);

struct PartitionResult {
  Partition partition;
  int max_weak_diameter = 0;
  std::optional<int> td_domination;  // domination number of the input decomposition
  bool exact = false;
};

// BFS layering from vertex 0; parts are the components of each layer. Edges
// only join consecutive layers, so layer parity 2-colours the quotient.
// Exceeding `budget` throws Error(budget_exceeded) with the achieved diameter.
PartitionResult bipartite_partition(const Graph& g, const TreeDecomposition& td,
                                    std::optional<int> budget = std::nullopt);

// Minimum achievable max part diameter over all partitions with bipartite
// quotient, by enumerating 2-colourings (monochromatic components are the
// parts). Ties go to the lexicographically first colouring with vertex 0
// coloured 0.
PartitionResult exact_bipartite_partition(const Graph& g, std::size_t cap = 12);

struct IndToTw {
  Graph graph;
  QuasiIsometryMap map;  // measured
  TreeDecomposition td;
  PartitionResult partition;
  int input_independence = 0;
  int output_independence = 0;
};

// Requires bag independence <= k; the output has every bag of size <= 2k.
IndToTw ind_to_tw(const Graph& g, const TreeDecomposition& td, int k, std::optional<int> budget = std::nullopt);

struct PipelineOptions {
  bool verify_centred = true;
  std::optional<int> budget;
  CentredOptions centred;
};

struct PipelineReport {
  int k = 0;
  int d = 0;
  int k_effective = 0;  // k, or the measured independence when verification was waived
  Shape shape = Shape::tree;
  std::size_t components = 1;

  Graph input;
  Graph augmented;
  Graph output;
  std::vector<Edge> added_edges;
  TreeDecomposition input_td;
  TreeDecomposition output_td;
  Partition partition;

  QuasiIsometryMap augment_map;
  QuasiIsometryMap quotient_map;
  QuasiIsometryMap composed_map;

  // Per connected component when the input is disconnected.
  std::vector<int> augment_constants;
  std::vector<int> quotient_constants;
  std::vector<int> composed_constants;
  std::vector<int> composition_bounds;  // F * (c + 2)

  int augment_constant = 0;
  int quotient_constant = 0;
  int composed_constant = 0;
  int composition_bound = 0;
  int claimed_bound = 0;  // (d + 2) * F
  int partition_diameter = 0;
  std::optional<int> td_domination;
  int augmented_independence = 0;
  int output_independence = 0;
  int width_out = 0;

  std::vector<Check> checks;

  bool passed() const { return all_pass(checks); }
};

PipelineReport run_pipeline(const Graph& g, const TreeDecomposition& td, int k, int d,
                            const PipelineOptions& options = {});

}  // namespace coarsetw
