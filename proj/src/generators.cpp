#include "coarsetw/generators.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "coarsetw/error.hpp"

namespace coarsetw::gen {
namespace {

Instance permuted(const Instance& in, const std::vector<Vertex>& perm) {
  Instance out = in;
  std::vector<Edge> edges;
  for (const auto& e : in.graph.edges()) {
    edges.push_back(Edge::make(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]));
  }
  std::sort(edges.begin(), edges.end());
  out.graph = Graph(in.graph.order(), edges);
  if (in.td) {
    for (auto& bag : out.td->bags) {
      for (auto& v : bag) v = perm[static_cast<std::size_t>(v)];
      bag = make_vertex_set(std::move(bag));
    }
  }
  return out;
}

std::vector<Vertex> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
  rng.shuffle(perm);
  return perm;
}

// Grows a k-tree; `along_path` restricts attachment to the newest bag so the
// natural decomposition is a path.
Instance grow_k_tree(int k, std::size_t n, Rng& rng, bool along_path) {
  if (k < 1) throw Error(Errc::invalid_argument, "k-tree needs k >= 1");
  const auto base = static_cast<std::size_t>(k) + 1;
  if (n < base) throw Error(Errc::invalid_argument, "k-tree needs at least k+1 vertices");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < static_cast<Vertex>(base); ++a) {
    for (Vertex b = a + 1; b < static_cast<Vertex>(base); ++b) edges.push_back({a, b});
  }
  TreeDecomposition td;
  td.shape = along_path ? Shape::path : Shape::tree;
  td.bags.push_back(all_vertices(Graph(base)));
  // k-cliques available for attachment, each with a bag containing it.
  std::vector<std::pair<VertexSet, int>> cliques;
  for (std::size_t drop = 0; drop < base; ++drop) {
    VertexSet c;
    for (Vertex v = 0; v < static_cast<Vertex>(base); ++v) {
      if (static_cast<std::size_t>(v) != drop) c.push_back(v);
    }
    cliques.emplace_back(std::move(c), 0);
  }
  for (Vertex v = static_cast<Vertex>(base); v < static_cast<Vertex>(n); ++v) {
    VertexSet clique;
    int host = 0;
    if (along_path) {
      host = static_cast<int>(td.bags.size()) - 1;
      clique = td.bags.back();
      // Keep the newest vertex so consecutive bags stay linked.
      const Vertex newest = clique.back();
      std::size_t drop = rng.below(clique.size());
      if (clique[drop] == newest && clique.size() > 1) drop = (drop + 1) % (clique.size() - 1);
      clique.erase(clique.begin() + static_cast<std::ptrdiff_t>(drop));
    } else {
      const auto& pick = cliques[rng.below(cliques.size())];
      clique = pick.first;
      host = pick.second;
    }
    for (Vertex u : clique) edges.push_back(Edge::make(u, v));
    VertexSet bag = clique;
    bag.push_back(v);
    const int id = static_cast<int>(td.bags.size());
    td.bags.push_back(make_vertex_set(std::move(bag)));
    td.tree_edges.emplace_back(host, id);
    if (!along_path) {
      for (std::size_t drop = 0; drop < clique.size(); ++drop) {
        VertexSet c = clique;
        c[drop] = v;
        cliques.emplace_back(make_vertex_set(std::move(c)), id);
      }
    }
  }
  Instance inst;
  inst.graph = Graph(n, edges);
  inst.td = std::move(td);
  return permuted(inst, random_permutation(n, rng));
}

}  // namespace

std::optional<Family> family_from_name(std::string_view name) {
  static constexpr std::array<std::pair<std::string_view, Family>, 9> names{{
      {"path", Family::path},
      {"cycle", Family::cycle},
      {"random-tree", Family::random_tree},
      {"k-tree", Family::k_tree},
      {"k-path", Family::k_path},
      {"subdivided-k-tree", Family::subdivided_k_tree},
      {"grid-slice", Family::grid_slice},
      {"random-graph", Family::random_graph},
      {"random-branch-decomposition", Family::random_branch_decomposition},
  }};
  for (const auto& [n, f] : names) {
    if (n == name) return f;
  }
  return std::nullopt;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::random_tree: return "random-tree";
    case Family::k_tree: return "k-tree";
    case Family::k_path: return "k-path";
    case Family::subdivided_k_tree: return "subdivided-k-tree";
    case Family::grid_slice: return "grid-slice";
    case Family::random_graph: return "random-graph";
    case Family::random_branch_decomposition: return "random-branch-decomposition";
  }
  return "unknown";
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({static_cast<Vertex>(i - 1), static_cast<Vertex>(i)});
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(Errc::invalid_argument, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back(Edge::make(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)));
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  }
  return Graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, static_cast<Vertex>(i)});
  return Graph(leaves + 1, edges);
}

Instance path_instance(std::size_t n) {
  Instance inst;
  inst.graph = path_graph(n);
  TreeDecomposition td;
  td.shape = Shape::path;
  if (n <= 1) {
    td.bags.push_back(all_vertices(inst.graph));
  } else {
    for (std::size_t i = 1; i < n; ++i) {
      td.bags.push_back({static_cast<Vertex>(i - 1), static_cast<Vertex>(i)});
      if (i > 1) td.tree_edges.emplace_back(static_cast<int>(i - 2), static_cast<int>(i - 1));
    }
  }
  inst.td = std::move(td);
  return inst;
}

Instance cycle_instance(std::size_t n) {
  Instance inst;
  inst.graph = cycle_graph(n);
  TreeDecomposition td;
  td.shape = Shape::path;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    td.bags.push_back(make_vertex_set({0, static_cast<Vertex>(i), static_cast<Vertex>(i + 1)}));
    if (i > 1) td.tree_edges.emplace_back(static_cast<int>(i - 2), static_cast<int>(i - 1));
  }
  inst.td = std::move(td);
  return inst;
}

Instance random_tree(std::size_t n, Rng& rng) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.push_back({static_cast<Vertex>(rng.below(v)), static_cast<Vertex>(v)});
  Instance inst;
  inst.graph = Graph(n, edges);
  // Eliminating children before parents leaves one later neighbour each.
  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(n - 1 - i);
  inst.td = decomposition_from_elimination(inst.graph, order);
  return permuted(inst, random_permutation(n, rng));
}

Instance k_tree(int k, std::size_t n, Rng& rng) { return grow_k_tree(k, n, rng, false); }

Instance k_path(int k, std::size_t n, Rng& rng) { return grow_k_tree(k, n, rng, true); }

Instance subdivided_k_tree(int k, std::size_t n, int s, Rng& rng) {
  if (s < 0) throw Error(Errc::invalid_argument, "subdivision count must be non-negative");
  Instance base = k_tree(k, n, rng);
  std::vector<Edge> edges;
  QuasiIsometryMap phi;
  phi.image.resize(n);
  for (std::size_t v = 0; v < n; ++v) phi.image[v] = static_cast<Vertex>(v);
  auto next = static_cast<Vertex>(n);
  for (const auto& e : base.graph.edges()) {
    // Chain u = c_0, c_1..c_s, c_{s+1} = v; c_i maps to the closer endpoint,
    // ties to u.
    Vertex prev = e.u;
    for (int i = 1; i <= s; ++i) {
      const Vertex c = next++;
      edges.push_back(Edge::make(prev, c));
      phi.image.push_back(i <= s + 1 - i ? e.u : e.v);
      prev = c;
    }
    edges.push_back(Edge::make(prev, e.v));
  }
  Instance out;
  out.graph = Graph(static_cast<std::size_t>(next), edges);
  phi.target_order = n;
  out.map = std::move(phi);
  out.base = base.graph;
  out.base_td = base.td;
  out.known_constant = s + 1;
  return out;
}

Instance grid_slice(std::size_t rows, std::size_t cols) {
  const std::size_t n = rows * cols;
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      const auto v = static_cast<Vertex>(j * rows + i);
      if (i + 1 < rows) edges.push_back({v, v + 1});
      if (j + 1 < cols) edges.push_back({v, static_cast<Vertex>(v + static_cast<Vertex>(rows))});
    }
  }
  Instance inst;
  inst.graph = Graph(n, edges);
  TreeDecomposition td;
  td.shape = Shape::path;
  if (n <= rows) {
    td.bags.push_back(all_vertices(inst.graph));
  } else {
    for (std::size_t t = 0; t + rows < n; ++t) {
      VertexSet bag;
      for (std::size_t i = t; i <= t + rows; ++i) bag.push_back(static_cast<Vertex>(i));
      td.bags.push_back(std::move(bag));
      if (t > 0) td.tree_edges.emplace_back(static_cast<int>(t - 1), static_cast<int>(t));
    }
  }
  inst.td = std::move(td);
  return inst;
}

Instance random_graph(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  const auto threshold = static_cast<std::size_t>(p * 1000000.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.below(1000000) < threshold) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  Instance inst;
  inst.graph = Graph(n, edges);
  return inst;
}

Instance generate(Family family, const Params& params, Rng& rng) {
  switch (family) {
    case Family::path: return path_instance(params.n);
    case Family::cycle: return cycle_instance(params.n);
    case Family::random_tree: return random_tree(params.n, rng);
    case Family::k_tree: return k_tree(params.k, params.n, rng);
    case Family::k_path: return k_path(params.k, params.n, rng);
    case Family::subdivided_k_tree: return subdivided_k_tree(params.k, params.n, params.s, rng);
    case Family::grid_slice: return grid_slice(params.rows, std::max<std::size_t>(1, params.n / std::max<std::size_t>(1, params.rows)));
    case Family::random_graph: return random_graph(params.n, params.p, rng);
    case Family::random_branch_decomposition: {
      Instance inst = random_graph(params.n, params.p, rng);
      inst.bd = random_branch_decomposition(inst.graph, rng);
      return inst;
    }
  }
  throw Error(Errc::invalid_argument, "unknown family");
}

BranchDecomposition random_branch_decomposition(const Graph& g, Rng& rng) {
  const auto n = g.order();
  BranchDecomposition bd;
  std::vector<int> leaves;
  if (n == 0) return bd;
  if (n == 1) {
    bd.node_count = 1;
    leaves = {0};
  } else if (n == 2) {
    bd.node_count = 2;
    bd.tree_edges = {{0, 1}};
    leaves = {0, 1};
  } else {
    bd.node_count = 4;
    bd.tree_edges = {{0, 1}, {0, 2}, {0, 3}};
    leaves = {1, 2, 3};
    while (leaves.size() < n) {
      // Subdivide a random edge and hang a new leaf off the subdivision node.
      const auto pick = rng.below(bd.tree_edges.size());
      const auto [x, y] = bd.tree_edges[pick];
      const int mid = static_cast<int>(bd.node_count++);
      const int leaf = static_cast<int>(bd.node_count++);
      bd.tree_edges[pick] = {x, mid};
      bd.tree_edges.emplace_back(mid, y);
      bd.tree_edges.emplace_back(mid, leaf);
      leaves.push_back(leaf);
    }
  }
  rng.shuffle(leaves);
  bd.leaf_of.assign(leaves.begin(), leaves.end());
  return bd;
}

TreeDecomposition coarsen(const TreeDecomposition& td, std::size_t merges, Rng& rng) {
  TreeDecomposition out = td;
  for (std::size_t step = 0; step < merges && !out.tree_edges.empty(); ++step) {
    const auto pick = rng.below(out.tree_edges.size());
    const auto [keep, gone] = out.tree_edges[pick];
    out.tree_edges.erase(out.tree_edges.begin() + static_cast<std::ptrdiff_t>(pick));
    auto& bag = out.bags[static_cast<std::size_t>(keep)];
    bag.insert(bag.end(), out.bags[static_cast<std::size_t>(gone)].begin(), out.bags[static_cast<std::size_t>(gone)].end());
    bag = make_vertex_set(std::move(bag));
    out.bags.erase(out.bags.begin() + gone);
    auto renumber = [&](int t) {
      if (t == gone) t = keep;
      return t > gone ? t - 1 : t;
    };
    for (auto& [a, b] : out.tree_edges) {
      a = renumber(a);
      b = renumber(b);
    }
  }
  return out;
}

}  // namespace coarsetw::gen
