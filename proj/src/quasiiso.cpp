#include "coarsetw/quasiiso.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "coarsetw/error.hpp"

namespace coarsetw {
namespace {

void require_connected(const Graph& g, const char* which) {
  if (!g.connected()) throw Error(Errc::disconnected, std::string(which) + " graph is disconnected");
}

// Smallest q >= 1 with dist_g <= q*dist_h + q^2, i.e. dist_g/q - q <= dist_h.
int lower_need(int dg, int dh) {
  int q = 1;
  while (q * dh + q * q < dg) ++q;
  return q;
}

// Smallest q >= 1 with dist_h <= q*(dist_g + 1).
int upper_need(int dg, int dh) { return std::max(1, (dh + dg) / (dg + 1)); }

int coverage_need(const Graph& h, const QuasiIsometryMap& phi) {
  if (phi.image.empty()) return h.order() == 0 ? 1 : std::numeric_limits<int>::max();
  const auto& dh = h.distances();
  std::vector<bool> hit(h.order(), false);
  for (Vertex y : phi.image) hit[static_cast<std::size_t>(y)] = true;
  int need = 1;
  for (Vertex x = 0; x < static_cast<Vertex>(h.order()); ++x) {
    int nearest = -1;
    for (Vertex y = 0; y < static_cast<Vertex>(h.order()); ++y) {
      if (!hit[static_cast<std::size_t>(y)]) continue;
      const int d = dh.hops(x, y);
      if (nearest < 0 || d < nearest) nearest = d;
    }
    need = std::max(need, nearest);
  }
  return need;
}

}  // namespace

QuasiIsometryMap identity_map(std::size_t n) {
  QuasiIsometryMap phi;
  phi.image.resize(n);
  for (std::size_t i = 0; i < n; ++i) phi.image[i] = static_cast<Vertex>(i);
  phi.target_order = n;
  return phi;
}

void check_map_shape(const Graph& g, const Graph& h, const QuasiIsometryMap& phi) {
  if (phi.source_order() != g.order()) {
    throw Error(Errc::invalid_argument, "map covers " + std::to_string(phi.source_order()) +
                                            " source vertices, graph has " + std::to_string(g.order()));
  }
  if (phi.target_order != h.order()) {
    throw Error(Errc::invalid_argument, "map targets a graph of order " + std::to_string(phi.target_order) +
                                            ", host has " + std::to_string(h.order()));
  }
  for (Vertex y : phi.image) {
    if (!h.contains(y)) throw Error(Errc::invalid_argument, "map image outside the host graph");
  }
}

bool is_quasi_isometry(const Graph& g, const Graph& h, const QuasiIsometryMap& phi, int q) {
  if (q < 1) throw Error(Errc::invalid_argument, "quasi-isometry constant must be positive");
  check_map_shape(g, h, phi);
  require_connected(g, "source");
  require_connected(h, "host");
  const auto& dg = g.distances();
  const auto& dh = h.distances();
  for (Vertex u = 0; u < static_cast<Vertex>(g.order()); ++u) {
    for (Vertex v = u + 1; v < static_cast<Vertex>(g.order()); ++v) {
      const int a = dg.hops(u, v);
      const int b = dh.hops(phi(u), phi(v));
      if (a > q * b + q * q) return false;
      if (b > q * a + q) return false;
    }
  }
  return coverage_need(h, phi) <= q;
}

std::optional<int> qi_constant(const Graph& g, const Graph& h, const QuasiIsometryMap& phi, int qmax) {
  check_map_shape(g, h, phi);
  require_connected(g, "source");
  require_connected(h, "host");
  const auto& dg = g.distances();
  const auto& dh = h.distances();
  // Each condition is monotone in q, so the minimal constant is the largest
  // per-pair requirement.
  int need = coverage_need(h, phi);
  for (Vertex u = 0; u < static_cast<Vertex>(g.order()) && need <= qmax; ++u) {
    for (Vertex v = u + 1; v < static_cast<Vertex>(g.order()); ++v) {
      const int a = dg.hops(u, v);
      const int b = dh.hops(phi(u), phi(v));
      need = std::max({need, lower_need(a, b), upper_need(a, b)});
    }
  }
  if (need > qmax) return std::nullopt;
  return need;
}

QuasiIsometryMap measured(const Graph& g, const Graph& h, QuasiIsometryMap phi, int qmax) {
  const auto q = qi_constant(g, h, phi, qmax);
  if (!q) throw Error(Errc::precondition, "map is not a quasi-isometry with constant <= " + std::to_string(qmax));
  phi.measured_q = *q;
  return phi;
}

ComposedMap compose(const Graph& g, const Graph& g1, const Graph& g2, const QuasiIsometryMap& phi1,
                    const QuasiIsometryMap& phi2) {
  if (phi1.target_order != phi2.source_order() || phi1.target_order != g1.order() ||
      (!phi1.target_name.empty() && !phi2.source_name.empty() && phi1.target_name != phi2.source_name)) {
    throw Error(Errc::composition_mismatch, "target of the first map is not the source of the second");
  }
  if (!phi1.measured_q || !phi2.measured_q) {
    throw Error(Errc::precondition, "both maps need measured constants before composing");
  }
  check_map_shape(g, g1, phi1);
  check_map_shape(g1, g2, phi2);
  ComposedMap out;
  out.bound = composition_bound(*phi1.measured_q, *phi2.measured_q);
  out.map.target_order = phi2.target_order;
  out.map.source_name = phi1.source_name;
  out.map.target_name = phi2.target_name;
  out.map.image.reserve(phi1.source_order());
  for (Vertex v : phi1.image) out.map.image.push_back(phi2(v));
  out.map.measured_q = qi_constant(g, g2, out.map, out.bound);
  if (!out.map.measured_q) {
    throw std::logic_error("composed map exceeds q(c+2) = " + std::to_string(out.bound));
  }
  return out;
}

VertexSet ball_preimage(const Graph& h, const QuasiIsometryMap& phi, Vertex x, int c) {
  const auto& dh = h.distances();
  VertexSet out;
  for (Vertex v = 0; v < static_cast<Vertex>(phi.source_order()); ++v) {
    const auto d = dh(phi(v), x);
    if (d.reachable() && d.hops() <= c) out.push_back(v);
  }
  return out;
}

TreeDecomposition pullback_decomposition(const Graph& g, const Graph& h, const QuasiIsometryMap& phi,
                                         const TreeDecomposition& td_h, int c) {
  if (c < 1) throw Error(Errc::invalid_argument, "quasi-isometry constant must be positive");
  check_map_shape(g, h, phi);
  require_connected(g, "source");
  require_connected(h, "host");
  if (!qi_constant(g, h, phi, c)) {
    throw Error(Errc::precondition, "map is not a " + std::to_string(c) + "-quasi-isometry");
  }
  if (const auto report = validate_decomposition(h, td_h); !report.ok()) {
    throw Error(Errc::invalid_decomposition, "host decomposition: " + report.message);
  }
  std::vector<std::optional<VertexSet>> balls(h.order());
  TreeDecomposition out;
  out.shape = td_h.shape;
  out.tree_edges = td_h.tree_edges;
  out.bags.reserve(td_h.node_count());
  for (const auto& host_bag : td_h.bags) {
    VertexSet bag;
    for (Vertex x : host_bag) {
      auto& ball = balls[static_cast<std::size_t>(x)];
      if (!ball) ball = ball_preimage(h, phi, x, c);
      bag.insert(bag.end(), ball->begin(), ball->end());
    }
    out.bags.push_back(make_vertex_set(std::move(bag)));
  }
  return out;
}

Vertex shortest_path_middle(const Graph& h, Vertex a, Vertex b) {
  const auto& dh = h.distances();
  const int len = dh.hops(a, b);
  Vertex cur = a;
  for (int step = 0; step < (len + 1) / 2; ++step) {
    const int remaining = dh.hops(cur, b);
    for (Vertex w : h.neighbors(cur)) {
      if (dh.hops(w, b) == remaining - 1) {
        cur = w;
        break;
      }
    }
  }
  return cur;
}

}  // namespace coarsetw
