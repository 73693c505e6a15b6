#include "coarsetw/pipeline.hpp"

#include <algorithm>
#include <string>

#include "coarsetw/error.hpp"
#include "coarsetw/solvers.hpp"

namespace coarsetw {
namespace {

template <typename Fn>
auto stage(const char* label, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw e.relabel(std::string("stage ") + label);
  }
}

void require_valid(const Graph& g, const TreeDecomposition& td) {
  if (const auto report = validate_decomposition(g, td); !report.ok()) {
    throw Error(Errc::invalid_decomposition, report.message);
  }
}

// Loose upper bound for measuring constants: no minimal constant of a map
// between connected graphs exceeds the larger order.
int measuring_cap(const Graph& g, const Graph& h) {
  return static_cast<int>(std::max(g.order(), h.order())) + 1;
}

TreeDecomposition restrict_td(const TreeDecomposition& td, const VertexSet& comp) {
  TreeDecomposition out;
  out.shape = td.shape;
  out.tree_edges = td.tree_edges;
  out.bags.reserve(td.node_count());
  for (const auto& bag : td.bags) {
    VertexSet local;
    for (Vertex v : bag) {
      auto it = std::lower_bound(comp.begin(), comp.end(), v);
      if (it != comp.end() && *it == v) local.push_back(static_cast<Vertex>(it - comp.begin()));
    }
    out.bags.push_back(std::move(local));
  }
  return out;
}

std::pair<int, int> path_ends(const TreeDecomposition& td) {
  const auto adj = td.tree_adjacency();
  std::vector<int> ends;
  for (std::size_t t = 0; t < adj.size(); ++t) {
    if (adj[t].size() <= 1) ends.push_back(static_cast<int>(t));
  }
  if (ends.size() == 1) return {ends[0], ends[0]};
  return {ends.front(), ends.back()};
}

PipelineReport run_connected(const Graph& g, const TreeDecomposition& td, int k, int d,
                             std::optional<int> budget) {
  PipelineReport r;
  r.input = g;
  r.input_td = td;
  auto aug = stage("augment", [&] { return augment(g, td, d); });
  r.augmented = aug.graph;
  r.added_edges = aug.added;
  r.augment_map = stage("augment", [&] { return measured(g, aug.graph, aug.map, measuring_cap(g, aug.graph)); });
  r.augment_constant = *r.augment_map.measured_q;

  auto second = stage("ind-to-tw", [&] { return ind_to_tw(aug.graph, aug.td, k, budget); });
  r.output = second.graph;
  r.output_td = second.td;
  r.partition = second.partition.partition;
  r.partition_diameter = second.partition.max_weak_diameter;
  r.td_domination = second.partition.td_domination;
  r.augmented_independence = second.input_independence;
  r.output_independence = second.output_independence;
  r.quotient_map = second.map;
  r.quotient_constant = *second.map.measured_q;

  auto composed = stage("compose", [&] { return compose(g, aug.graph, second.graph, r.augment_map, second.map); });
  r.composed_map = composed.map;
  r.composed_constant = *composed.map.measured_q;
  r.composition_bound = composed.bound;
  r.augment_constants = {r.augment_constant};
  r.quotient_constants = {r.quotient_constant};
  r.composed_constants = {r.composed_constant};
  r.composition_bounds = {r.composition_bound};
  return r;
}

PipelineReport merge_components(const Graph& g, const TreeDecomposition& td, const std::vector<VertexSet>& comps,
                                std::vector<PipelineReport>& parts) {
  PipelineReport r;
  r.input = g;
  r.input_td = td;
  r.components = comps.size();
  GraphBuilder augmented(g.order());
  std::vector<VertexSet> merged_parts;
  std::vector<Edge> out_edges;
  r.quotient_map.image.assign(g.order(), 0);
  int offset = 0;
  int previous_end = -1;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& comp = comps[i];
    auto& part = parts[i];
    for (const auto& e : part.augmented.edges()) {
      augmented.add_edge(comp[static_cast<std::size_t>(e.u)], comp[static_cast<std::size_t>(e.v)]);
    }
    for (const auto& e : part.added_edges) {
      r.added_edges.push_back(Edge::make(comp[static_cast<std::size_t>(e.u)], comp[static_cast<std::size_t>(e.v)]));
    }
    for (const auto& p : part.partition.parts) {
      VertexSet global;
      for (Vertex v : p) global.push_back(comp[static_cast<std::size_t>(v)]);
      merged_parts.push_back(std::move(global));
    }
    for (std::size_t v = 0; v < comp.size(); ++v) {
      r.quotient_map.image[static_cast<std::size_t>(comp[v])] = offset + part.quotient_map.image[v];
    }
    for (const auto& e : part.output.edges()) out_edges.push_back({e.u + offset, e.v + offset});
    const int node_offset = static_cast<int>(r.output_td.node_count());
    for (const auto& bag : part.output_td.bags) {
      VertexSet shifted;
      for (Vertex v : bag) shifted.push_back(v + offset);
      r.output_td.bags.push_back(std::move(shifted));
    }
    for (const auto& [a, b] : part.output_td.tree_edges) {
      r.output_td.tree_edges.emplace_back(a + node_offset, b + node_offset);
    }
    const auto [first, last] = path_ends(part.output_td);
    if (previous_end >= 0) r.output_td.tree_edges.emplace_back(previous_end, first + node_offset);
    previous_end = last + node_offset;
    offset += static_cast<int>(part.output.order());

    r.augment_constants.push_back(part.augment_constant);
    r.quotient_constants.push_back(part.quotient_constant);
    r.composed_constants.push_back(part.composed_constant);
    r.composition_bounds.push_back(part.composition_bound);
    r.augment_constant = std::max(r.augment_constant, part.augment_constant);
    r.quotient_constant = std::max(r.quotient_constant, part.quotient_constant);
    r.composed_constant = std::max(r.composed_constant, part.composed_constant);
    r.composition_bound = std::max(r.composition_bound, part.composition_bound);
    r.partition_diameter = std::max(r.partition_diameter, part.partition_diameter);
    if (part.td_domination) r.td_domination = std::max(r.td_domination.value_or(0), *part.td_domination);
    r.augmented_independence = std::max(r.augmented_independence, part.augmented_independence);
    r.output_independence = std::max(r.output_independence, part.output_independence);
  }
  r.output_td.shape = td.shape;
  r.augmented = std::move(augmented).build();
  r.output = Graph(static_cast<std::size_t>(offset), out_edges);
  r.partition.parts = std::move(merged_parts);
  r.partition.part_of = r.quotient_map.image;
  r.augment_map = identity_map(g.order());
  r.augment_map.measured_q = r.augment_constant;
  r.quotient_map.target_order = static_cast<std::size_t>(offset);
  r.quotient_map.measured_q = r.quotient_constant;
  r.composed_map = r.quotient_map;
  r.composed_map.measured_q = r.composed_constant;
  return r;
}

}  // namespace

Partition Partition::from_parts(std::size_t n, std::vector<VertexSet> parts) {
  Partition p;
  p.part_of.assign(n, -1);
  for (auto& part : parts) {
    part = make_vertex_set(std::move(part));
    if (part.empty()) throw Error(Errc::invalid_partition, "empty part");
    for (Vertex v : part) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw Error(Errc::invalid_partition, "part vertex out of range");
      auto& slot = p.part_of[static_cast<std::size_t>(v)];
      if (slot >= 0) throw Error(Errc::invalid_partition, "vertex v" + std::to_string(v + 1) + " in two parts");
      slot = static_cast<int>(&part - parts.data());
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (p.part_of[v] < 0) throw Error(Errc::invalid_partition, "vertex v" + std::to_string(v + 1) + " in no part");
  }
  p.parts = std::move(parts);
  return p;
}

Partition Partition::singletons(std::size_t n) {
  std::vector<VertexSet> parts(n);
  for (std::size_t v = 0; v < n; ++v) parts[v] = {static_cast<Vertex>(v)};
  return from_parts(n, std::move(parts));
}

void validate_partition(const Graph& g, const Partition& p) {
  if (p.part_of.size() != g.order()) throw Error(Errc::invalid_partition, "partition does not match graph order");
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (induced_subgraph(g, p.parts[i]).components().size() != 1) {
      throw Error(Errc::invalid_partition, "part " + std::to_string(i + 1) + " is not connected")
          .with_value(static_cast<long long>(i));
    }
  }
}

Distance max_part_diameter(const Graph& g, const Partition& p) {
  Distance best(0);
  for (const auto& part : p.parts) best = std::max(best, weak_diameter(g, part));
  return best;
}

Augmented augment(const Graph& g, const TreeDecomposition& td, int d) {
  if (d < 0) throw Error(Errc::invalid_argument, "d must be non-negative");
  require_valid(g, td);
  const auto& dist = g.distances();
  GraphBuilder b(g);
  Augmented out;
  for (const auto& bag : td.bags) {
    for (std::size_t i = 0; i < bag.size(); ++i) {
      for (std::size_t j = i + 1; j < bag.size(); ++j) {
        const auto h = dist(bag[i], bag[j]);
        if (h.reachable() && h.hops() <= d && b.add_edge(bag[i], bag[j])) {
          out.added.push_back(Edge::make(bag[i], bag[j]));
        }
      }
    }
  }
  std::sort(out.added.begin(), out.added.end());
  out.graph = std::move(b).build();
  out.map = identity_map(g.order());
  out.td = td;
  return out;
}

Graph quotient(const Graph& g, const Partition& p) {
  validate_partition(g, p);
  GraphBuilder b(p.size());
  for (const auto& e : g.edges()) {
    const int a = p.part_of[static_cast<std::size_t>(e.u)];
    const int c = p.part_of[static_cast<std::size_t>(e.v)];
    if (a != c) b.add_edge(a, c);
  }
  return std::move(b).build();
}

QuasiIsometryMap quotient_map(const Graph& g, const Partition& p, int d) {
  validate_partition(g, p);
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    const auto diam = weak_diameter(g, p.parts[i]);
    if (!(diam < Distance(d))) {
      throw Error(Errc::diameter_exceeded, "part " + std::to_string(i + 1) + " has weak diameter >= " +
                                               std::to_string(d))
          .with_value(static_cast<long long>(i));
    }
  }
  const Graph q = quotient(g, p);
  QuasiIsometryMap phi;
  phi.image.assign(p.part_of.begin(), p.part_of.end());
  phi.target_order = p.size();
  return measured(g, q, std::move(phi), measuring_cap(g, q));
}

TreeDecomposition push_decomposition(const Graph& g, const TreeDecomposition& td, const Partition& p) {
  require_valid(g, td);
  validate_partition(g, p);
  TreeDecomposition out;
  out.shape = td.shape;
  out.tree_edges = td.tree_edges;
  out.bags.reserve(td.node_count());
  for (const auto& bag : td.bags) {
    VertexSet pushed;
    for (Vertex v : bag) pushed.push_back(p.part_of[static_cast<std::size_t>(v)]);
    out.bags.push_back(make_vertex_set(std::move(pushed)));
  }
  return out;
}

PartitionResult bipartite_partition(const Graph& g, const TreeDecomposition& td, std::optional<int> budget) {
  if (!g.connected()) throw Error(Errc::disconnected, "bipartite partition needs a connected graph");
  require_valid(g, td);
  PartitionResult out;
  try {
    out.td_domination = bag_metrics(g, td).domination_number();
  } catch (const Error& e) {
    if (e.code() != Errc::too_large) throw;
  }
  if (g.order() == 0) return out;
  const auto layer = bfs_hops(g, 0);
  std::vector<bool> seen(g.order(), false);
  std::vector<VertexSet> parts;
  for (Vertex s = 0; s < static_cast<Vertex>(g.order()); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    // Component of s inside its own BFS layer.
    VertexSet part{s};
    seen[static_cast<std::size_t>(s)] = true;
    for (std::size_t head = 0; head < part.size(); ++head) {
      for (Vertex w : g.neighbors(part[head])) {
        if (!seen[static_cast<std::size_t>(w)] && layer[static_cast<std::size_t>(w)] == layer[static_cast<std::size_t>(s)]) {
          seen[static_cast<std::size_t>(w)] = true;
          part.push_back(w);
        }
      }
    }
    parts.push_back(std::move(part));
  }
  out.partition = Partition::from_parts(g.order(), std::move(parts));
  out.max_weak_diameter = max_part_diameter(g, out.partition).hops();
  if (budget && out.max_weak_diameter > *budget) {
    throw Error(Errc::budget_exceeded, "achieved weak diameter " + std::to_string(out.max_weak_diameter) +
                                           " exceeds budget " + std::to_string(*budget))
        .with_value(out.max_weak_diameter);
  }
  return out;
}

PartitionResult exact_bipartite_partition(const Graph& g, std::size_t cap) {
  const auto n = g.order();
  if (n > cap) throw Error(Errc::too_large, "exact bipartite partition is limited to " + std::to_string(cap) + " vertices");
  if (!g.connected()) throw Error(Errc::disconnected, "bipartite partition needs a connected graph");
  PartitionResult best;
  best.exact = true;
  if (n == 0) return best;
  const auto& dist = g.distances();
  const std::size_t free_bits = n - 1;
  int best_diameter = -1;
  std::vector<int> colour(n, 0);
  for (std::size_t code = 0; code < (std::size_t{1} << free_bits); ++code) {
    // Vertex 1 is the most significant free bit, giving lexicographic order.
    for (std::size_t v = 1; v < n; ++v) colour[v] = static_cast<int>((code >> (free_bits - v)) & 1U);
    std::vector<int> comp(n, -1);
    std::vector<VertexSet> parts;
    int diameter = 0;
    for (std::size_t s = 0; s < n && (best_diameter < 0 || diameter < best_diameter); ++s) {
      if (comp[s] >= 0) continue;
      VertexSet part{static_cast<Vertex>(s)};
      comp[s] = static_cast<int>(parts.size());
      for (std::size_t head = 0; head < part.size(); ++head) {
        for (Vertex w : g.neighbors(part[head])) {
          const auto sw = static_cast<std::size_t>(w);
          if (comp[sw] < 0 && colour[sw] == colour[s]) {
            comp[sw] = comp[s];
            part.push_back(w);
          }
        }
      }
      for (std::size_t i = 0; i < part.size(); ++i) {
        for (std::size_t j = i + 1; j < part.size(); ++j) diameter = std::max(diameter, dist.hops(part[i], part[j]));
      }
      parts.push_back(std::move(part));
    }
    if (best_diameter < 0 || diameter < best_diameter) {
      // The early exit above only triggers when this colouring is no better.
      best_diameter = diameter;
      best.partition = Partition::from_parts(n, std::move(parts));
      best.max_weak_diameter = diameter;
    }
  }
  return best;
}

IndToTw ind_to_tw(const Graph& g, const TreeDecomposition& td, int k, std::optional<int> budget) {
  if (k < 1) throw Error(Errc::invalid_argument, "k must be positive");
  require_valid(g, td);
  IndToTw out;
  out.input_independence = bag_metrics(g, td).independence_number();
  if (out.input_independence > k) {
    throw Error(Errc::precondition, "decomposition has independence number " +
                                        std::to_string(out.input_independence) + " > k = " + std::to_string(k));
  }
  out.partition = bipartite_partition(g, td, budget);
  out.graph = quotient(g, out.partition.partition);
  out.map = quotient_map(g, out.partition.partition, out.partition.max_weak_diameter + 1);
  out.td = push_decomposition(g, td, out.partition.partition);
  out.output_independence = bag_metrics(out.graph, out.td).independence_number();
  return out;
}

PipelineReport run_pipeline(const Graph& g, const TreeDecomposition& td, int k, int d,
                            const PipelineOptions& options) {
  if (k < 1) throw Error(Errc::invalid_argument, "k must be positive");
  if (d < 0) throw Error(Errc::invalid_argument, "d must be non-negative");
  if (g.order() == 0) throw Error(Errc::empty_set, "pipeline on the empty graph");
  stage("validate", [&] {
    require_valid(g, td);
    return 0;
  });
  int k_effective = k;
  if (options.verify_centred) {
    const auto centred = stage("centred-check", [&] { return centred_check_decomposition(g, td, k, d, options.centred); });
    if (!centred.yes()) {
      throw Error(Errc::precondition, "stage centred-check: decomposition is not certified (" + std::to_string(k) +
                                          "," + std::to_string(d) + ")-centred");
    }
  } else {
    const auto probe = augment(g, td, d);
    k_effective = std::max(k, bag_metrics(probe.graph, probe.td).independence_number());
  }

  const auto comps = g.components();
  PipelineReport r;
  if (comps.size() == 1) {
    r = run_connected(g, td, k_effective, d, options.budget);
  } else {
    std::vector<PipelineReport> parts;
    for (const auto& comp : comps) {
      parts.push_back(run_connected(induced_subgraph(g, comp), restrict_td(td, comp), k_effective, d, options.budget));
    }
    r = merge_components(g, td, comps, parts);
  }
  r.k = k;
  r.d = d;
  r.k_effective = k_effective;
  r.shape = td.shape;
  r.width_out = width(r.output_td);
  r.claimed_bound = (d + 2) * r.quotient_constant;

  const int ke = k_effective;
  auto& checks = r.checks;
  checks.push_back(check_at_most("augment_constant", "d", r.augment_constant, std::max(d, 1)));
  checks.push_back(check_at_most("augmented_independence", "k", r.augmented_independence, ke));
  checks.push_back(check_true("quotient_bipartite", is_bipartite(r.output).bipartite));
  checks.push_back(check_at_most("quotient_constant", "partition_diameter+1", r.quotient_constant, r.partition_diameter + 1));
  checks.push_back(check_at_most("output_independence", "k", r.output_independence, ke));
  checks.push_back(check_at_most("width_out", "2k-1", r.width_out, 2LL * ke - 1));
  checks.push_back(check_true("output_td_valid", validate_decomposition(r.output, r.output_td).ok()));
  checks.push_back(check_true("shape_preserved", r.output_td.shape == td.shape));
  for (std::size_t i = 0; i < r.composed_constants.size(); ++i) {
    const std::string suffix = r.composed_constants.size() > 1 ? "[" + std::to_string(i + 1) + "]" : "";
    checks.push_back(check_at_most("composed_constant" + suffix, "q(c+2)", r.composed_constants[i], r.composition_bounds[i]));
    checks.push_back(check_at_most("composed_constant" + suffix, "(d+2)*F", r.composed_constants[i],
                                   static_cast<long long>(d + 2) * r.quotient_constants[i]));
  }
  if (options.budget) {
    checks.push_back(check_at_most("partition_diameter", "budget", r.partition_diameter, *options.budget));
  }
  return r;
}

}  // namespace coarsetw
