#pragma once

#include <cstddef>
#include <vector>

#include "coarsetw/checks.hpp"
#include "coarsetw/decomposition.hpp"
#include "coarsetw/graph.hpp"
#include "coarsetw/pipeline.hpp"

namespace coarsetw {

// Subcubic tree on nodes 0..node_count-1 with a bijection from the graph's
// vertices onto its leaves (leaf_of[v] is the node holding v).
struct BranchDecomposition {
  std::size_t node_count = 0;
  std::vector<TreeEdge> tree_edges;
  std::vector<int> leaf_of;

  std::vector<std::vector<int>> tree_adjacency() const;

  friend bool operator==(const BranchDecomposition&, const BranchDecomposition&) = default;
};

// Throws Error(malformed_decomposition) unless bd is a tree whose leaves are
// exactly the images of leaf_of (one vertex each) and whose internal nodes
// have degree 3 (degree 2 is tolerated only for graphs with <= 2 vertices).
void validate_branch_decomposition(const Graph& g, const BranchDecomposition& bd);

// Largest induced matching a1b1..ambm of g with every ai in a and every bi
// outside a.
int simval(const Graph& g, std::span<const Vertex> a);

// Vertices on the first endpoint's side of each tree edge, in tree_edges order.
std::vector<VertexSet> branch_cuts(const BranchDecomposition& bd);

int branch_width_sim(const Graph& g, const BranchDecomposition& bd);

// For every edge uv, u and v join the bag of every node on the tree path
// between their leaves; an isolated vertex v gets the bag {v} at its leaf.
TreeDecomposition sim_to_td(const Graph& g, const BranchDecomposition& bd);

// Partition of s grouping every vertex with its smallest-id neighbour in a
// minimum dominating set D of g[s] (members of D lead their own part). Every
// part has weak diameter <= 2 in g.
std::vector<VertexSet> dominating_partition(const Graph& g, std::span<const Vertex> s,
                                            std::size_t cap = kBagCap);

struct SimPipelineReport {
  int sim_width = 0;
  int centred_k = 0;  // 6 * sim_width (at least 1)
  TreeDecomposition td;
  BagMetrics td_metrics;
  std::vector<std::vector<VertexSet>> bag_partitions;
  int max_partition_diameter = 0;
  PipelineReport pipeline;
  std::vector<Check> checks;

  bool passed() const { return all_pass(checks) && pipeline.passed(); }
};

SimPipelineReport simwidth_pipeline(const Graph& g, const BranchDecomposition& bd,
                                    const PipelineOptions& options = {});

}  // namespace coarsetw
