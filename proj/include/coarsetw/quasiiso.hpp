#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coarsetw/decomposition.hpp"
#include "coarsetw/graph.hpp"

namespace coarsetw {

// Total vertex map from a source graph into a target graph of order
// `target_order`. Names are optional labels used to catch mismatched
// compositions.
struct QuasiIsometryMap {
  std::vector<Vertex> image;
  std::size_t target_order = 0;
  std::optional<int> measured_q;
  std::string source_name;
  std::string target_name;

  std::size_t source_order() const { return image.size(); }
  Vertex operator()(Vertex v) const { return image[static_cast<std::size_t>(v)]; }
};

QuasiIsometryMap identity_map(std::size_t n);

// Throws Error(invalid_argument) unless phi is a total map from g into h.
void check_map_shape(const Graph& g, const Graph& h, const QuasiIsometryMap& phi);

// Whether phi is a q-quasi-isometry: for all u,v
//   dist_g(u,v)/q - q <= dist_h(phi u, phi v) <= q*dist_g(u,v) + q
// and every vertex of h lies within q of the image. Both graphs must be
// connected; q >= 1.
bool is_quasi_isometry(const Graph& g, const Graph& h, const QuasiIsometryMap& phi, int q);

// Smallest q in 1..qmax for which phi is a q-quasi-isometry, or nullopt when
// none is. Throws Error(disconnected) if either graph is disconnected.
std::optional<int> qi_constant(const Graph& g, const Graph& h, const QuasiIsometryMap& phi, int qmax);

// Returns phi with measured_q filled in; throws Error(precondition) if no
// constant <= qmax exists.
QuasiIsometryMap measured(const Graph& g, const Graph& h, QuasiIsometryMap phi, int qmax);

// Bound on the constant of a composition of a c- and a q-quasi-isometry.
constexpr int composition_bound(int c, int q) { return q * (c + 2); }

struct ComposedMap {
  QuasiIsometryMap map;  // measured_q is set
  int bound = 0;         // q * (c + 2) from the two input constants
};

// phi2 after phi1, for phi1: g -> g1 (constant c) and phi2: g1 -> g2
// (constant q). Both inputs must carry measured constants. The composed
// constant is measured and checked against the bound.
ComposedMap compose(const Graph& g, const Graph& g1, const Graph& g2, const QuasiIsometryMap& phi1,
                    const QuasiIsometryMap& phi2);

// {v in V(g) : dist_h(phi(v), x) <= c}
VertexSet ball_preimage(const Graph& h, const QuasiIsometryMap& phi, Vertex x, int c);

// Lifts a decomposition of h to g through a c-quasi-isometry phi: g -> h.
// Bag t becomes the union of ball_preimage(x) over x in the bag. A host
// decomposition of width k yields a (k+1, 3c^2)-centred decomposition of g
// with the same tree and shape.
TreeDecomposition pullback_decomposition(const Graph& g, const Graph& h, const QuasiIsometryMap& phi,
                                         const TreeDecomposition& td_h, int c);

// Middle vertex of the lexicographically smallest shortest (a,b)-path in h:
// the ceil(len/2)-th vertex after a.
Vertex shortest_path_middle(const Graph& h, Vertex a, Vertex b);

}  // namespace coarsetw
