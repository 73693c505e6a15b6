#include "coarsetw/graph.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <string>

#include "coarsetw/error.hpp"

namespace coarsetw {

int Distance::hops() const {
  if (!reachable()) throw Error(Errc::disconnected, "distance is unreachable");
  return hops_;
}

DistanceMatrix::DistanceMatrix(std::size_t n) : n_(n), hops_(n * n, -1) {}

int DistanceMatrix::hops(Vertex u, Vertex v) const {
  const auto h = hops_[index(u, v)];
  if (h < 0) {
    throw Error(Errc::disconnected,
                "no path between vertices " + std::to_string(u + 1) + " and " + std::to_string(v + 1));
  }
  return h;
}

void DistanceMatrix::set_row(Vertex u, std::span<const int> row) {
  std::copy(row.begin(), row.end(), hops_.begin() + static_cast<std::ptrdiff_t>(index(u, 0)));
}

struct Graph::DistanceCache {
  std::once_flag once;
  DistanceMatrix matrix;
};

Graph::Graph() : cache_(std::make_shared<DistanceCache>()) {}

Graph::Graph(std::size_t n) : adjacency_(n), cache_(std::make_shared<DistanceCache>()) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& e : edges) {
    if (e.u == e.v) throw Error(Errc::invalid_argument, "self-loop at vertex " + std::to_string(e.u + 1));
    if (!contains(e.u) || !contains(e.v)) throw Error(Errc::invalid_argument, "edge endpoint out of range");
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw Error(Errc::invalid_argument, "duplicate edge");
    }
  }
  edge_count_ = edges.size();
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < static_cast<Vertex>(order()); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

const DistanceMatrix& Graph::distances() const {
  std::call_once(cache_->once, [this] { cache_->matrix = all_pairs_distances(*this); });
  return cache_->matrix;
}

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  std::vector<bool> seen(order(), false);
  for (Vertex s = 0; s < static_cast<Vertex>(order()); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    VertexSet comp;
    std::deque<Vertex> queue{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (Vertex w : neighbors(u)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::connected() const { return components().size() <= 1; }

GraphBuilder::GraphBuilder(std::size_t n) : adjacency_(n) {}

GraphBuilder::GraphBuilder(const Graph& base) : adjacency_(base.adjacency_) {}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u == v) throw Error(Errc::invalid_argument, "self-loop at vertex " + std::to_string(u + 1));
  const auto n = static_cast<Vertex>(adjacency_.size());
  if (u < 0 || v < 0 || u >= n || v >= n) throw Error(Errc::invalid_argument, "edge endpoint out of range");
  auto& nu = adjacency_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return false;
  nu.insert(it, v);
  auto& nv = adjacency_[static_cast<std::size_t>(v)];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  return true;
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  const auto& nu = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(nu.begin(), nu.end(), v);
}

Graph GraphBuilder::build() && {
  Graph g(adjacency_.size());
  std::size_t degree_sum = 0;
  for (const auto& nbrs : adjacency_) degree_sum += nbrs.size();
  g.adjacency_ = std::move(adjacency_);
  g.edge_count_ = degree_sum / 2;
  return g;
}

std::vector<int> bfs_hops(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix m(g.order());
  for (Vertex s = 0; s < static_cast<Vertex>(g.order()); ++s) {
    const auto row = bfs_hops(g, s);
    m.set_row(s, row);
  }
  return m;
}

Distance weak_diameter(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw Error(Errc::empty_set, "weak diameter of an empty set");
  const auto& dist = g.distances();
  Distance best(0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const auto d = dist(s[i], s[j]);
      if (!d.reachable()) return Distance::unreachable();
      best = std::max(best, d);
    }
  }
  return best;
}

Graph power_graph(const Graph& g, int d, std::span<const Vertex> restrict) {
  const VertexSet s = make_vertex_set({restrict.begin(), restrict.end()});
  const auto& dist = g.distances();
  GraphBuilder b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const auto h = dist(s[i], s[j]);
      if (h.reachable() && h.hops() <= d) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> restrict) {
  const VertexSet s = make_vertex_set({restrict.begin(), restrict.end()});
  GraphBuilder b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (Vertex w : g.neighbors(s[i])) {
      auto it = std::lower_bound(s.begin(), s.end(), w);
      if (it != s.end() && *it == w && s[i] < w) {
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(it - s.begin()));
      }
    }
  }
  return std::move(b).build();
}

BipartiteResult is_bipartite(const Graph& g) {
  const auto n = g.order();
  BipartiteResult out;
  out.side.assign(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<int> depth(n, 0);
  for (Vertex root = 0; root < static_cast<Vertex>(n); ++root) {
    if (out.side[static_cast<std::size_t>(root)] >= 0) continue;
    out.side[static_cast<std::size_t>(root)] = 0;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      const auto su = static_cast<std::size_t>(u);
      for (Vertex w : g.neighbors(u)) {
        const auto sw = static_cast<std::size_t>(w);
        if (out.side[sw] < 0) {
          out.side[sw] = 1 - out.side[su];
          parent[sw] = u;
          depth[sw] = depth[su] + 1;
          queue.push_back(w);
        } else if (out.side[sw] == out.side[su]) {
          // Both endpoints sit at the same BFS parity: climb to the common
          // ancestor to extract the odd cycle.
          std::vector<Vertex> left{u};
          std::vector<Vertex> right{w};
          Vertex a = u;
          Vertex b = w;
          while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
            a = parent[static_cast<std::size_t>(a)];
            left.push_back(a);
          }
          while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
            b = parent[static_cast<std::size_t>(b)];
            right.push_back(b);
          }
          while (a != b) {
            a = parent[static_cast<std::size_t>(a)];
            b = parent[static_cast<std::size_t>(b)];
            left.push_back(a);
            right.push_back(b);
          }
          right.pop_back();
          out.odd_cycle = std::move(left);
          out.odd_cycle.insert(out.odd_cycle.end(), right.rbegin(), right.rend());
          out.bipartite = false;
          out.side.clear();
          return out;
        }
      }
    }
  }
  return out;
}

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

VertexSet all_vertices(const Graph& g) {
  VertexSet out(g.order());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Vertex>(i);
  return out;
}

}  // namespace coarsetw
