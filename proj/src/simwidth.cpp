#include "coarsetw/simwidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "coarsetw/error.hpp"
#include "coarsetw/solvers.hpp"

namespace coarsetw {
namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

// Branches over the A side in vertex order: each a is either left unmatched
// or matched to a free neighbour b outside A; the closed neighbourhoods of a
// and b are then blocked for the rest of the matching.
class InducedMatchingSearch {
 public:
  InducedMatchingSearch(const Graph& g, const std::vector<bool>& in_a) {
    const auto n = g.order();
    closed_.resize(n);
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
      closed_[static_cast<std::size_t>(v)] = bit(v);
      for (Vertex w : g.neighbors(v)) closed_[static_cast<std::size_t>(v)] |= bit(w);
    }
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
      if (!in_a[static_cast<std::size_t>(v)]) continue;
      Mask across = 0;
      for (Vertex w : g.neighbors(v)) {
        if (!in_a[static_cast<std::size_t>(w)]) across |= bit(w);
      }
      if (across) {
        side_.push_back(v);
        across_.push_back(across);
      }
    }
  }

  int run() {
    best_ = 0;
    search(0, 0, 0);
    return best_;
  }

 private:
  void search(std::size_t i, Mask blocked, int matched) {
    int open = 0;
    for (std::size_t j = i; j < side_.size(); ++j) {
      if (!(blocked & bit(side_[j])) && (across_[j] & ~blocked)) ++open;
    }
    if (matched + open <= best_) return;
    if (i == side_.size()) {
      best_ = std::max(best_, matched);
      return;
    }
    const Vertex a = side_[i];
    if (!(blocked & bit(a))) {
      for (Mask m = across_[i] & ~blocked; m; m &= m - 1) {
        const int b = std::countr_zero(m);
        search(i + 1, blocked | closed_[static_cast<std::size_t>(a)] | closed_[static_cast<std::size_t>(b)], matched + 1);
      }
    }
    search(i + 1, blocked, matched);
  }

  std::vector<Mask> closed_;
  std::vector<Vertex> side_;
  std::vector<Mask> across_;
  int best_ = 0;
};

// Parent pointers and depths of the tree rooted at node 0.
struct RootedTree {
  std::vector<int> parent;
  std::vector<int> depth;

  explicit RootedTree(const std::vector<std::vector<int>>& adj) : parent(adj.size(), -1), depth(adj.size(), 0) {
    if (adj.empty()) return;
    std::vector<int> stack{0};
    std::vector<bool> seen(adj.size(), false);
    seen[0] = true;
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      for (int u : adj[static_cast<std::size_t>(t)]) {
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = true;
          parent[static_cast<std::size_t>(u)] = t;
          depth[static_cast<std::size_t>(u)] = depth[static_cast<std::size_t>(t)] + 1;
          stack.push_back(u);
        }
      }
    }
  }

  std::vector<int> path(int a, int b) const {
    std::vector<int> left{a};
    std::vector<int> right{b};
    while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) left.push_back(a = parent[static_cast<std::size_t>(a)]);
    while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) right.push_back(b = parent[static_cast<std::size_t>(b)]);
    while (a != b) {
      left.push_back(a = parent[static_cast<std::size_t>(a)]);
      right.push_back(b = parent[static_cast<std::size_t>(b)]);
    }
    right.pop_back();
    left.insert(left.end(), right.rbegin(), right.rend());
    return left;
  }
};

}  // namespace

std::vector<std::vector<int>> BranchDecomposition::tree_adjacency() const {
  std::vector<std::vector<int>> adj(node_count);
  for (const auto& [a, b] : tree_edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return adj;
}

void validate_branch_decomposition(const Graph& g, const BranchDecomposition& bd) {
  TreeDecomposition shape_only;
  shape_only.bags.resize(bd.node_count);
  shape_only.tree_edges = bd.tree_edges;
  check_tree_structure(shape_only);
  if (bd.leaf_of.size() != g.order()) {
    throw Error(Errc::malformed_decomposition, "branch decomposition maps " + std::to_string(bd.leaf_of.size()) +
                                                   " vertices, graph has " + std::to_string(g.order()));
  }
  const auto adj = bd.tree_adjacency();
  std::vector<int> holder(bd.node_count, -1);
  for (std::size_t v = 0; v < bd.leaf_of.size(); ++v) {
    const int t = bd.leaf_of[v];
    if (t < 0 || static_cast<std::size_t>(t) >= bd.node_count) {
      throw Error(Errc::malformed_decomposition, "leaf of v" + std::to_string(v + 1) + " is not a tree node");
    }
    if (adj[static_cast<std::size_t>(t)].size() > 1) {
      throw Error(Errc::malformed_decomposition, "v" + std::to_string(v + 1) + " is mapped to an internal node");
    }
    if (holder[static_cast<std::size_t>(t)] >= 0) {
      throw Error(Errc::malformed_decomposition, "two vertices share leaf " + std::to_string(t + 1));
    }
    holder[static_cast<std::size_t>(t)] = static_cast<int>(v);
  }
  for (std::size_t t = 0; t < bd.node_count; ++t) {
    const auto deg = adj[t].size();
    if (deg <= 1) {
      if (holder[t] < 0) throw Error(Errc::malformed_decomposition, "leaf " + std::to_string(t + 1) + " holds no vertex");
    } else if (deg > 3 || (deg == 2 && g.order() > 2)) {
      throw Error(Errc::malformed_decomposition, "internal node " + std::to_string(t + 1) + " has degree " +
                                                     std::to_string(deg));
    }
  }
}

int simval(const Graph& g, std::span<const Vertex> a) {
  if (g.order() > kMaskLimit) {
    throw Error(Errc::too_large, "simval is limited to " + std::to_string(kMaskLimit) + " vertices")
        .with_value(static_cast<long long>(g.order()));
  }
  std::vector<bool> in_a(g.order(), false);
  for (Vertex v : a) {
    if (!g.contains(v)) throw Error(Errc::invalid_argument, "simval set contains a vertex outside the graph");
    in_a[static_cast<std::size_t>(v)] = true;
  }
  return InducedMatchingSearch(g, in_a).run();
}

std::vector<VertexSet> branch_cuts(const BranchDecomposition& bd) {
  const auto adj = bd.tree_adjacency();
  std::vector<int> holder(bd.node_count, -1);
  for (std::size_t v = 0; v < bd.leaf_of.size(); ++v) holder[static_cast<std::size_t>(bd.leaf_of[v])] = static_cast<int>(v);
  std::vector<VertexSet> cuts;
  cuts.reserve(bd.tree_edges.size());
  for (const auto& [x, y] : bd.tree_edges) {
    VertexSet side;
    std::vector<int> stack{x};
    std::vector<bool> seen(bd.node_count, false);
    seen[static_cast<std::size_t>(x)] = true;
    seen[static_cast<std::size_t>(y)] = true;
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      if (holder[static_cast<std::size_t>(t)] >= 0) side.push_back(holder[static_cast<std::size_t>(t)]);
      for (int u : adj[static_cast<std::size_t>(t)]) {
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = true;
          stack.push_back(u);
        }
      }
    }
    cuts.push_back(make_vertex_set(std::move(side)));
  }
  return cuts;
}

int branch_width_sim(const Graph& g, const BranchDecomposition& bd) {
  validate_branch_decomposition(g, bd);
  int best = 0;
  for (const auto& side : branch_cuts(bd)) best = std::max(best, simval(g, side));
  return best;
}

TreeDecomposition sim_to_td(const Graph& g, const BranchDecomposition& bd) {
  validate_branch_decomposition(g, bd);
  TreeDecomposition td;
  if (g.order() <= 1) {
    td.bags.push_back(all_vertices(g));
    return td;
  }
  td.tree_edges = bd.tree_edges;
  td.bags.resize(bd.node_count);
  const RootedTree rooted(bd.tree_adjacency());
  for (const auto& e : g.edges()) {
    for (int t : rooted.path(bd.leaf_of[static_cast<std::size_t>(e.u)], bd.leaf_of[static_cast<std::size_t>(e.v)])) {
      auto& bag = td.bags[static_cast<std::size_t>(t)];
      bag.push_back(e.u);
      bag.push_back(e.v);
    }
  }
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
    if (g.degree(v) == 0) td.bags[static_cast<std::size_t>(bd.leaf_of[static_cast<std::size_t>(v)])].push_back(v);
  }
  for (auto& bag : td.bags) bag = make_vertex_set(std::move(bag));
  return td;
}

std::vector<VertexSet> dominating_partition(const Graph& g, std::span<const Vertex> s_in, std::size_t cap) {
  const VertexSet s = make_vertex_set({s_in.begin(), s_in.end()});
  if (s.empty()) return {};
  const Graph sub = induced_subgraph(g, s);
  const VertexSet dominators = minimum_dominating_set(sub, cap);
  std::vector<VertexSet> parts(dominators.size());
  std::vector<int> slot(s.size(), -1);
  for (std::size_t i = 0; i < dominators.size(); ++i) slot[static_cast<std::size_t>(dominators[i])] = static_cast<int>(i);
  for (Vertex v = 0; v < static_cast<Vertex>(s.size()); ++v) {
    int owner = slot[static_cast<std::size_t>(v)];
    if (owner < 0) {
      for (Vertex w : sub.neighbors(v)) {
        if (slot[static_cast<std::size_t>(w)] >= 0) {
          owner = slot[static_cast<std::size_t>(w)];
          break;
        }
      }
    }
    parts[static_cast<std::size_t>(owner)].push_back(s[static_cast<std::size_t>(v)]);
  }
  return parts;
}

SimPipelineReport simwidth_pipeline(const Graph& g, const BranchDecomposition& bd, const PipelineOptions& options) {
  SimPipelineReport r;
  r.sim_width = branch_width_sim(g, bd);
  r.centred_k = std::max(1, 6 * r.sim_width);
  r.td = sim_to_td(g, bd);
  r.td_metrics = bag_metrics(g, r.td);
  auto& checks = r.checks;
  checks.push_back(check_true("sim_td_valid", validate_decomposition(g, r.td).ok()));
  checks.push_back(check_at_most("td_domination", "6k", r.td_metrics.domination_number(), r.centred_k));
  const auto adj = bd.tree_adjacency();
  int leaf_domination = 0;
  for (std::size_t t = 0; t < adj.size(); ++t) {
    if (adj[t].size() <= 1) leaf_domination = std::max(leaf_domination, r.td_metrics.bags[t].domination);
  }
  if (g.order() >= 2) checks.push_back(check_at_most("leaf_domination", "1", leaf_domination, 1));

  std::size_t most_parts = 0;
  for (const auto& bag : r.td.bags) {
    auto parts = dominating_partition(g, bag);
    for (const auto& part : parts) r.max_partition_diameter = std::max(r.max_partition_diameter, weak_diameter(g, part).hops());
    most_parts = std::max(most_parts, parts.size());
    r.bag_partitions.push_back(std::move(parts));
  }
  checks.push_back(check_at_most("centred_parts", "6k", static_cast<long long>(most_parts), r.centred_k));
  checks.push_back(check_at_most("centred_part_diameter", "3", r.max_partition_diameter, 3));

  PipelineOptions inner = options;
  inner.verify_centred = false;
  r.pipeline = run_pipeline(g, r.td, r.centred_k, 3, inner);
  checks.push_back(check_at_most("width_out", "12k-1", r.pipeline.width_out, 2LL * r.centred_k - 1));
  return r;
}

}  // namespace coarsetw
