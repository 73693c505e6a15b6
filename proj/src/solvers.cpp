#include "coarsetw/solvers.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>

#include "coarsetw/error.hpp"

namespace coarsetw {
namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

constexpr Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

int lowest(Mask m) { return std::countr_zero(m); }

int count(Mask m) { return std::popcount(m); }

std::vector<Mask> adjacency_masks(const Graph& g, std::size_t cap, const char* what) {
  const std::size_t limit = std::min(cap, kMaskLimit);
  if (g.order() > limit) {
    throw Error(Errc::too_large, std::string(what) + " on " + std::to_string(g.order()) +
                                     " vertices exceeds cap " + std::to_string(limit))
        .with_value(static_cast<long long>(g.order()));
  }
  std::vector<Mask> adj(g.order(), 0);
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
    for (Vertex w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= bit(w);
  }
  return adj;
}

std::vector<Mask> complement_masks(const std::vector<Mask>& adj) {
  const Mask all = full_mask(adj.size());
  std::vector<Mask> out(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) out[v] = all & ~adj[v] & ~bit(static_cast<int>(v));
  return out;
}

VertexSet mask_to_set(Mask m) {
  VertexSet out;
  while (m) {
    const int v = lowest(m);
    out.push_back(v);
    m &= m - 1;
  }
  return out;
}

// Branch and bound maximum clique with greedy-colouring bounds.
class CliqueSearch {
 public:
  explicit CliqueSearch(const std::vector<Mask>& adj) : adj_(adj) {}

  Mask run() {
    best_size_ = 0;
    best_ = 0;
    if (!adj_.empty()) expand(full_mask(adj_.size()), 0, 0);
    return best_;
  }

 private:
  void expand(Mask candidates, Mask current, int size) {
    std::array<int, 64> order{};
    std::array<int, 64> bound{};
    int m = 0;
    Mask uncoloured = candidates;
    int colour = 0;
    while (uncoloured) {
      ++colour;
      Mask cls = uncoloured;
      while (cls) {
        const int v = lowest(cls);
        cls &= ~bit(v) & ~adj_[static_cast<std::size_t>(v)];
        uncoloured &= ~bit(v);
        order[static_cast<std::size_t>(m)] = v;
        bound[static_cast<std::size_t>(m)] = colour;
        ++m;
      }
    }
    for (int i = m - 1; i >= 0; --i) {
      if (size + bound[static_cast<std::size_t>(i)] <= best_size_) return;
      const int v = order[static_cast<std::size_t>(i)];
      const Mask next = candidates & adj_[static_cast<std::size_t>(v)];
      const Mask with_v = current | bit(v);
      if (next == 0) {
        if (size + 1 > best_size_) {
          best_size_ = size + 1;
          best_ = with_v;
        }
      } else {
        expand(next, with_v, size + 1);
      }
      candidates &= ~bit(v);
    }
  }

  const std::vector<Mask>& adj_;
  int best_size_ = 0;
  Mask best_ = 0;
};

// DSATUR backtracking: finds a colouring with at most `limit` colours.
class ColouringSearch {
 public:
  explicit ColouringSearch(const std::vector<Mask>& adj) : adj_(adj), n_(static_cast<int>(adj.size())) {}

  std::optional<std::vector<int>> run(int limit) {
    colour_.assign(adj_.size(), -1);
    classes_.assign(static_cast<std::size_t>(std::max(limit, 0)), 0);
    if (n_ == 0) return std::vector<int>{};
    if (limit <= 0) return std::nullopt;
    if (search(full_mask(adj_.size()), 0, limit)) return colour_;
    return std::nullopt;
  }

 private:
  Mask forbidden(int v, int used) const {
    Mask out = 0;
    for (int c = 0; c < used; ++c) {
      if (classes_[static_cast<std::size_t>(c)] & adj_[static_cast<std::size_t>(v)]) out |= bit(c);
    }
    return out;
  }

  bool search(Mask uncoloured, int used, int limit) {
    if (uncoloured == 0) return true;
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    Mask pick_forbidden = 0;
    for (Mask m = uncoloured; m; m &= m - 1) {
      const int v = lowest(m);
      const Mask f = forbidden(v, used);
      const int sat = count(f);
      const int deg = count(adj_[static_cast<std::size_t>(v)] & uncoloured);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
        pick_forbidden = f;
      }
    }
    const int top = std::min(used + 1, limit);
    for (int c = 0; c < top; ++c) {
      if (pick_forbidden & bit(c)) continue;
      colour_[static_cast<std::size_t>(pick)] = c;
      classes_[static_cast<std::size_t>(c)] |= bit(pick);
      if (search(uncoloured & ~bit(pick), std::max(used, c + 1), limit)) return true;
      classes_[static_cast<std::size_t>(c)] &= ~bit(pick);
      colour_[static_cast<std::size_t>(pick)] = -1;
    }
    return false;
  }

  const std::vector<Mask>& adj_;
  int n_;
  std::vector<int> colour_;
  std::vector<Mask> classes_;
};

// Vertex-order backtracking with forward checking; the first colouring found
// is the lexicographically smallest one.
class LexColouring {
 public:
  LexColouring(const std::vector<Mask>& adj, int k)
      : adj_(adj), k_(k), colour_(adj.size(), -1), domain_(adj.size(), full_mask(static_cast<std::size_t>(k))) {}

  std::optional<std::vector<int>> run() {
    if (assign(0, -1)) return colour_;
    return std::nullopt;
  }

 private:
  bool assign(int v, int max_used) {
    if (v == static_cast<int>(adj_.size())) return true;
    const Mask canonical = full_mask(static_cast<std::size_t>(std::min(max_used + 2, k_)));
    Mask options = domain_[static_cast<std::size_t>(v)] & canonical;
    const Mask later = adj_[static_cast<std::size_t>(v)] & ~full_mask(static_cast<std::size_t>(v) + 1);
    while (options) {
      const int c = lowest(options);
      options &= options - 1;
      bool wiped = false;
      Mask touched = 0;
      for (Mask m = later; m; m &= m - 1) {
        const int w = lowest(m);
        auto& dom = domain_[static_cast<std::size_t>(w)];
        if (dom & bit(c)) {
          dom &= ~bit(c);
          touched |= bit(w);
          if (dom == 0) {
            wiped = true;
            break;
          }
        }
      }
      if (!wiped) {
        colour_[static_cast<std::size_t>(v)] = c;
        if (assign(v + 1, std::max(max_used, c))) return true;
        colour_[static_cast<std::size_t>(v)] = -1;
      }
      for (Mask m = touched; m; m &= m - 1) domain_[static_cast<std::size_t>(lowest(m))] |= bit(c);
    }
    return false;
  }

  const std::vector<Mask>& adj_;
  int k_;
  std::vector<int> colour_;
  std::vector<Mask> domain_;
};

class DominationSearch {
 public:
  explicit DominationSearch(const std::vector<Mask>& adj) : all_(full_mask(adj.size())) {
    closed_.resize(adj.size());
    for (std::size_t v = 0; v < adj.size(); ++v) closed_[v] = adj[v] | bit(static_cast<int>(v));
  }

  VertexSet run() {
    for (int r = 1; r <= static_cast<int>(closed_.size()); ++r) {
      chosen_.clear();
      if (search(0, r)) return make_vertex_set(chosen_);
    }
    return {};
  }

 private:
  bool search(Mask dominated, int budget) {
    const Mask open = all_ & ~dominated;
    if (open == 0) return true;
    if (budget == 0) return false;
    int gain = 0;
    for (const Mask c : closed_) gain = std::max(gain, count(c & open));
    if (gain * budget < count(open)) return false;
    // Branch on the undominated vertex with the fewest possible dominators.
    int pivot = -1;
    int fewest = 65;
    for (Mask m = open; m; m &= m - 1) {
      const int u = lowest(m);
      const int options = count(closed_[static_cast<std::size_t>(u)]);
      if (options < fewest) {
        fewest = options;
        pivot = u;
      }
    }
    for (Mask m = closed_[static_cast<std::size_t>(pivot)]; m; m &= m - 1) {
      const int w = lowest(m);
      chosen_.push_back(w);
      if (search(dominated | closed_[static_cast<std::size_t>(w)], budget - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  Mask all_;
  std::vector<Mask> closed_;
  std::vector<Vertex> chosen_;
};

}  // namespace

std::vector<int> greedy_coloring(const Graph& g) {
  const auto n = g.order();
  std::vector<int> colour(n, -1);
  std::vector<std::vector<bool>> seen(n);
  std::vector<int> saturation(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (colour[v] >= 0) continue;
      if (pick == n || saturation[v] > saturation[pick] ||
          (saturation[v] == saturation[pick] && g.degree(static_cast<Vertex>(v)) > g.degree(static_cast<Vertex>(pick)))) {
        pick = v;
      }
    }
    std::vector<bool> used(n + 1, false);
    for (Vertex w : g.neighbors(static_cast<Vertex>(pick))) {
      if (colour[static_cast<std::size_t>(w)] >= 0) used[static_cast<std::size_t>(colour[static_cast<std::size_t>(w)])] = true;
    }
    int c = 0;
    while (used[static_cast<std::size_t>(c)]) ++c;
    colour[pick] = c;
    for (Vertex w : g.neighbors(static_cast<Vertex>(pick))) {
      auto& s = seen[static_cast<std::size_t>(w)];
      if (s.size() <= static_cast<std::size_t>(c)) s.resize(static_cast<std::size_t>(c) + 1, false);
      if (!s[static_cast<std::size_t>(c)]) {
        s[static_cast<std::size_t>(c)] = true;
        ++saturation[static_cast<std::size_t>(w)];
      }
    }
  }
  return colour;
}

int exact_chromatic_number(const Graph& g, std::size_t cap) {
  const auto adj = adjacency_masks(g, cap, "chromatic number");
  if (adj.empty()) return 0;
  const int lower = count(CliqueSearch(adj).run());
  const auto greedy = greedy_coloring(g);
  int upper = *std::max_element(greedy.begin(), greedy.end()) + 1;
  ColouringSearch search(adj);
  while (upper > lower) {
    const auto found = search.run(upper - 1);
    if (!found) break;
    upper = *std::max_element(found->begin(), found->end()) + 1;
  }
  return upper;
}

std::optional<std::vector<int>> lex_first_coloring(const Graph& g, int k, std::size_t cap) {
  const auto adj = adjacency_masks(g, cap, "colouring");
  if (adj.empty()) return std::vector<int>{};
  if (k <= 0) return std::nullopt;
  k = std::min(k, static_cast<int>(adj.size()));
  // Cheap refutation first; the lexicographic search then runs only on
  // instances known to be colourable.
  if (!ColouringSearch(adj).run(k)) return std::nullopt;
  return LexColouring(adj, k).run();
}

int exact_clique_number(const Graph& g, std::size_t cap) {
  const auto adj = adjacency_masks(g, cap, "clique number");
  return count(CliqueSearch(adj).run());
}

VertexSet maximum_independent_set(const Graph& g, std::size_t cap) {
  const auto adj = adjacency_masks(g, cap, "independence number");
  const auto co = complement_masks(adj);
  return mask_to_set(CliqueSearch(co).run());
}

int exact_independence_number(const Graph& g, std::size_t cap) {
  return static_cast<int>(maximum_independent_set(g, cap).size());
}

VertexSet minimum_dominating_set(const Graph& g, std::size_t cap) {
  if (g.order() == 0) throw Error(Errc::empty_set, "domination number of the empty graph");
  const auto adj = adjacency_masks(g, cap, "domination number");
  return DominationSearch(adj).run();
}

int exact_domination_number(const Graph& g, std::size_t cap) {
  return static_cast<int>(minimum_dominating_set(g, cap).size());
}

TreewidthResult exact_treewidth(const Graph& g, std::size_t cap) {
  const std::size_t limit = std::min<std::size_t>(cap, 24);
  const auto adj = adjacency_masks(g, limit, "treewidth");
  const auto n = adj.size();
  TreewidthResult out;
  if (n == 0) {
    out.witness.bags.emplace_back();
    return out;
  }
  // tw[S] is the best width achievable when the vertices of S are eliminated
  // first (any order), counting only their elimination cliques.
  const std::size_t states = std::size_t{1} << n;
  std::vector<std::int8_t> tw(states, 0);
  auto elimination_degree = [&](Mask s, int v) {
    Mask reach = bit(v);
    Mask frontier = bit(v);
    Mask border = 0;
    while (frontier) {
      Mask next = 0;
      for (Mask m = frontier; m; m &= m - 1) next |= adj[static_cast<std::size_t>(lowest(m))];
      border |= next;
      frontier = next & s & ~reach;
      reach |= frontier;
    }
    return count(border & ~s & ~bit(v));
  };
  tw[0] = -1;
  for (std::size_t s = 1; s < states; ++s) {
    int best = 127;
    for (Mask m = s; m; m &= m - 1) {
      const int v = lowest(m);
      const Mask rest = s & ~bit(v);
      const int w = std::max<int>(tw[rest], elimination_degree(rest, v));
      best = std::min(best, w);
    }
    tw[s] = static_cast<std::int8_t>(best);
  }
  out.width = tw[states - 1];
  std::vector<Vertex> reversed;
  Mask s = static_cast<Mask>(states - 1);
  while (s) {
    for (Mask m = s; m; m &= m - 1) {
      const int v = lowest(m);
      const Mask rest = s & ~bit(v);
      if (std::max<int>(tw[rest], elimination_degree(rest, v)) == tw[s]) {
        reversed.push_back(v);
        s = rest;
        break;
      }
    }
  }
  out.elimination_order.assign(reversed.rbegin(), reversed.rend());
  out.witness = decomposition_from_elimination(g, out.elimination_order);
  return out;
}

}  // namespace coarsetw
