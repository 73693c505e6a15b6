#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace coarsetw {

// Vertices are 0-based indices internally; file formats use 1-based ids and
// the parsers/emitters translate.
using Vertex = std::int32_t;

// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

// Undirected edge, normalised so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

// Hop distance between two vertices, or the distinguished unreachable value.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(int hops) : hops_(hops) {}

  static constexpr Distance unreachable() { return Distance(); }

  constexpr bool reachable() const { return hops_ >= 0; }
  int hops() const;  // throws Error(disconnected) when unreachable

  // Unreachable compares greater than every finite distance.
  friend constexpr bool operator==(Distance, Distance) = default;
  friend constexpr std::strong_ordering operator<=>(Distance a, Distance b) {
    if (a.reachable() != b.reachable()) {
      return a.reachable() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.hops_ <=> b.hops_;
  }

 private:
  int hops_ = -1;
};

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n);

  std::size_t order() const { return n_; }

  Distance operator()(Vertex u, Vertex v) const {
    const auto h = hops_[index(u, v)];
    return h < 0 ? Distance::unreachable() : Distance(h);
  }
  bool reachable(Vertex u, Vertex v) const { return hops_[index(u, v)] >= 0; }
  // Finite distance; throws Error(disconnected) for an unreachable pair.
  int hops(Vertex u, Vertex v) const;

  void set_row(Vertex u, std::span<const int> row);

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v);
  }

  std::size_t n_ = 0;
  std::vector<std::int32_t> hops_;  // negative entries encode "no path"
};

// Simple undirected graph. Immutable after construction; all-pairs distances
// are computed on first use and shared between copies.
class Graph {
 public:
  Graph();
  explicit Graph(std::size_t n);
  // Throws Error(invalid_argument) on self-loops, out-of-range ids or
  // duplicate edges.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < order(); }

  std::vector<Edge> edges() const;

  const DistanceMatrix& distances() const;

  std::vector<VertexSet> components() const;
  bool connected() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  friend class GraphBuilder;
  struct DistanceCache;

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
  std::shared_ptr<DistanceCache> cache_;
};

// Incremental construction. Duplicate edges are ignored (add_edge reports
// whether the edge was new); self-loops are rejected.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  explicit GraphBuilder(const Graph& base);

  bool add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  std::size_t order() const { return adjacency_.size(); }

  Graph build() &&;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

// Hop distances from `source`; entries for unreachable vertices are negative.
std::vector<int> bfs_hops(const Graph& g, Vertex source);

// Maximum distance in g (not in g[s]) over pairs of s. Throws Error(empty_set).
Distance weak_diameter(const Graph& g, std::span<const Vertex> s);

// Graph on `restrict` (vertex i of the result is restrict[i] after sorting)
// with u~v iff dist_g(u,v) <= d.
Graph power_graph(const Graph& g, int d, std::span<const Vertex> restrict);

// g[s] with vertex i of the result standing for the i-th smallest element of s.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);

struct BipartiteResult {
  bool bipartite = true;
  std::vector<int> side;          // 0/1 per vertex when bipartite
  std::vector<Vertex> odd_cycle;  // closed walk v0..vk (v0 adjacent to vk) otherwise
};

BipartiteResult is_bipartite(const Graph& g);

VertexSet make_vertex_set(std::vector<Vertex> vertices);
VertexSet all_vertices(const Graph& g);

}  // namespace coarsetw
