#include "coarsetw/decomposition.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "coarsetw/error.hpp"
#include "coarsetw/solvers.hpp"

namespace coarsetw {
namespace {

std::string vid(Vertex v) { return "v" + std::to_string(v + 1); }

// Induced-subgraph conflict graph on s: u,v adjacent iff dist_g(u,v) > d.
Graph far_pairs_graph(const Graph& g, const VertexSet& s, int d) {
  const auto& dist = g.distances();
  GraphBuilder b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const auto h = dist(s[i], s[j]);
      if (!h.reachable() || h.hops() > d) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return std::move(b).build();
}

std::vector<VertexSet> classes_of(const VertexSet& s, const std::vector<int>& colour) {
  std::vector<VertexSet> parts;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto c = static_cast<std::size_t>(colour[i]);
    if (parts.size() <= c) parts.resize(c + 1);
    parts[c].push_back(s[i]);
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

std::vector<std::vector<int>> TreeDecomposition::tree_adjacency() const {
  std::vector<std::vector<int>> adj(node_count());
  for (const auto& [a, b] : tree_edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return adj;
}

void check_tree_structure(const TreeDecomposition& td) {
  const auto nodes = static_cast<int>(td.node_count());
  for (const auto& [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes) {
      throw Error(Errc::malformed_decomposition, "tree edge references unknown node");
    }
    if (a == b) throw Error(Errc::malformed_decomposition, "tree edge is a loop");
  }
  const std::size_t expected = nodes == 0 ? 0 : static_cast<std::size_t>(nodes - 1);
  if (td.tree_edges.size() != expected) {
    throw Error(Errc::malformed_decomposition, "tree on " + std::to_string(nodes) + " nodes needs " +
                                                   std::to_string(expected) + " edges, got " +
                                                   std::to_string(td.tree_edges.size()));
  }
  if (nodes == 0) return;
  const auto adj = td.tree_adjacency();
  std::vector<bool> seen(adj.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int t = stack.back();
    stack.pop_back();
    for (int u : adj[static_cast<std::size_t>(t)]) {
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != adj.size()) throw Error(Errc::malformed_decomposition, "tree edges do not connect all nodes");
  if (td.shape == Shape::path) {
    for (const auto& nbrs : adj) {
      if (nbrs.size() > 2) throw Error(Errc::malformed_decomposition, "path decomposition has a node of degree > 2");
    }
  }
}

ValidationReport validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  check_tree_structure(td);
  ValidationReport report;
  std::vector<std::vector<int>> trace(g.order());
  for (std::size_t t = 0; t < td.node_count(); ++t) {
    for (Vertex v : td.bags[t]) {
      if (!g.contains(v)) {
        report.violation = Violation::vertex_out_of_range;
        report.vertex = v;
        report.message = "bag " + std::to_string(t + 1) + " contains " + vid(v) + " outside the graph";
        return report;
      }
      trace[static_cast<std::size_t>(v)].push_back(static_cast<int>(t));
    }
  }
  for (const auto& e : g.edges()) {
    const auto& a = trace[static_cast<std::size_t>(e.u)];
    const auto& b = trace[static_cast<std::size_t>(e.v)];
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.empty()) {
      report.violation = Violation::edge_uncovered;
      report.edge = e;
      report.message = "edge " + vid(e.u) + vid(e.v) + " is not contained in any bag";
      return report;
    }
  }
  const auto adj = td.tree_adjacency();
  std::vector<int> mark(td.node_count(), -1);
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
    const auto& nodes = trace[static_cast<std::size_t>(v)];
    if (nodes.empty()) {
      report.violation = Violation::vertex_missing;
      report.vertex = v;
      report.message = vid(v) + " is in no bag";
      return report;
    }
    for (int t : nodes) mark[static_cast<std::size_t>(t)] = v;
    std::vector<int> stack{nodes.front()};
    mark[static_cast<std::size_t>(nodes.front())] = -2 - v;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      for (int u : adj[static_cast<std::size_t>(t)]) {
        if (mark[static_cast<std::size_t>(u)] == v) {
          mark[static_cast<std::size_t>(u)] = -2 - v;
          ++reached;
          stack.push_back(u);
        }
      }
    }
    if (reached != nodes.size()) {
      report.violation = Violation::trace_disconnected;
      report.vertex = v;
      report.message = "bags containing " + vid(v) + " do not induce a connected subtree";
      return report;
    }
  }
  return report;
}

int width(const TreeDecomposition& td) {
  std::size_t best = 0;
  for (const auto& bag : td.bags) best = std::max(best, bag.size());
  return static_cast<int>(best) - 1;
}

int BagMetrics::independence_number() const {
  int best = 0;
  for (const auto& b : bags) best = std::max(best, b.independence);
  return best;
}

int BagMetrics::domination_number() const {
  int best = 0;
  for (const auto& b : bags) best = std::max(best, b.domination);
  return best;
}

std::size_t BagMetrics::max_bag_size() const {
  std::size_t best = 0;
  for (const auto& b : bags) best = std::max(best, b.size);
  return best;
}

BagMetrics bag_metrics(const Graph& g, const TreeDecomposition& td, std::size_t cap) {
  BagMetrics out;
  out.bags.reserve(td.node_count());
  for (std::size_t t = 0; t < td.node_count(); ++t) {
    const auto& bag = td.bags[t];
    BagMetric m;
    m.size = bag.size();
    if (!bag.empty()) {
      try {
        const Graph sub = induced_subgraph(g, bag);
        m.independence = exact_independence_number(sub, cap);
        m.domination = exact_domination_number(sub, cap);
      } catch (const Error& e) {
        throw e.relabel("bag " + std::to_string(t + 1)).with_bag(t);
      }
    }
    out.bags.push_back(m);
  }
  return out;
}

CentredResult centred_check(const Graph& g, std::span<const Vertex> s_in, int k, int d,
                            const CentredOptions& options) {
  if (s_in.empty()) throw Error(Errc::empty_set, "centred check of an empty set");
  if (k < 1) throw Error(Errc::invalid_argument, "k must be positive");
  if (d < 0) throw Error(Errc::invalid_argument, "d must be non-negative");
  const VertexSet s = make_vertex_set({s_in.begin(), s_in.end()});
  CentredResult out;
  if (options.mode == CentredMode::exact) {
    const Graph conflicts = far_pairs_graph(g, s, d);
    const auto colouring = lex_first_coloring(conflicts, k, options.cap);
    if (!colouring) {
      out.verdict = Verdict::no;
      return out;
    }
    out.verdict = Verdict::yes;
    out.witness = classes_of(s, *colouring);
    return out;
  }
  // First fit in vertex order: join the first part whose members are all
  // within distance d.
  const auto& dist = g.distances();
  std::vector<VertexSet> parts;
  for (Vertex v : s) {
    auto fits = [&](const VertexSet& part) {
      return std::all_of(part.begin(), part.end(), [&](Vertex u) {
        const auto h = dist(u, v);
        return h.reachable() && h.hops() <= d;
      });
    };
    auto it = std::find_if(parts.begin(), parts.end(), fits);
    if (it == parts.end()) {
      parts.push_back({v});
    } else {
      it->push_back(v);
    }
  }
  if (parts.size() <= static_cast<std::size_t>(k)) {
    out.verdict = Verdict::yes;
    out.witness = std::move(parts);
  } else {
    out.verdict = Verdict::unknown;
  }
  return out;
}

int centred_parts(const Graph& g, std::span<const Vertex> s_in, int d, std::size_t cap) {
  if (s_in.empty()) return 0;
  const VertexSet s = make_vertex_set({s_in.begin(), s_in.end()});
  return exact_chromatic_number(far_pairs_graph(g, s, d), cap);
}

DecompositionCentredResult centred_check_decomposition(const Graph& g, const TreeDecomposition& td,
                                                       int k, int d, const CentredOptions& options) {
  DecompositionCentredResult out;
  out.bags.reserve(td.node_count());
  bool unknown = false;
  for (std::size_t t = 0; t < td.node_count(); ++t) {
    CentredResult r;
    if (td.bags[t].empty()) {
      r.verdict = Verdict::yes;
    } else {
      try {
        r = centred_check(g, td.bags[t], k, d, options);
      } catch (const Error& e) {
        throw e.relabel("bag " + std::to_string(t + 1)).with_bag(t);
      }
    }
    if (r.verdict == Verdict::no && !out.first_failure) out.first_failure = t;
    if (r.verdict == Verdict::unknown) unknown = true;
    out.bags.push_back(std::move(r));
  }
  if (out.first_failure) {
    out.verdict = Verdict::no;
  } else if (unknown) {
    out.verdict = Verdict::unknown;
  }
  return out;
}

TreeDecomposition decomposition_from_elimination(const Graph& g, std::span<const Vertex> order) {
  const auto n = g.order();
  if (order.size() != n) throw Error(Errc::invalid_argument, "elimination order must list every vertex once");
  std::vector<int> position(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    if (!g.contains(v) || position[static_cast<std::size_t>(v)] >= 0) {
      throw Error(Errc::invalid_argument, "elimination order must list every vertex once");
    }
    position[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<std::set<Vertex>> fill(n);
  for (const auto& e : g.edges()) {
    fill[static_cast<std::size_t>(e.u)].insert(e.v);
    fill[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  TreeDecomposition td;
  td.bags.resize(n);
  std::vector<int> roots;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    std::vector<Vertex> later;
    for (Vertex w : fill[static_cast<std::size_t>(v)]) {
      if (position[static_cast<std::size_t>(w)] > static_cast<int>(i)) later.push_back(w);
    }
    for (std::size_t a = 0; a < later.size(); ++a) {
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        fill[static_cast<std::size_t>(later[a])].insert(later[b]);
        fill[static_cast<std::size_t>(later[b])].insert(later[a]);
      }
    }
    VertexSet bag = later;
    bag.push_back(v);
    td.bags[i] = make_vertex_set(std::move(bag));
    if (later.empty()) {
      roots.push_back(static_cast<int>(i));
    } else {
      int parent = static_cast<int>(n);
      for (Vertex w : later) parent = std::min(parent, position[static_cast<std::size_t>(w)]);
      td.tree_edges.emplace_back(static_cast<int>(i), parent);
    }
  }
  for (std::size_t r = 1; r < roots.size(); ++r) td.tree_edges.emplace_back(roots[r - 1], roots[r]);
  return td;
}

TreeDecomposition relabel_nodes(const TreeDecomposition& td, std::span<const int> perm) {
  TreeDecomposition out;
  out.shape = td.shape;
  out.bags.resize(td.node_count());
  for (std::size_t t = 0; t < td.node_count(); ++t) out.bags[static_cast<std::size_t>(perm[t])] = td.bags[t];
  for (const auto& [a, b] : td.tree_edges) {
    out.tree_edges.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
  }
  return out;
}

}  // namespace coarsetw
