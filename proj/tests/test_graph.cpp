#include <doctest.h>

#include "coarsetw/error.hpp"
#include "coarsetw/generators.hpp"
#include "coarsetw/graph.hpp"
#include "oracles.hpp"

using namespace coarsetw;
using oracle::set;

TEST_SUITE("graph") {

TEST_CASE("path distances") {
  const auto g = gen::path_graph(5);
  CHECK(g.distances()(0, 4) == Distance(4));
  CHECK(g.distances().hops(1, 3) == 2);
}

TEST_CASE("cross-component pairs are unreachable") {
  const auto g = oracle::graph(4, {{1, 2}, {3, 4}});
  CHECK_FALSE(g.distances()(0, 2).reachable());
  CHECK(g.distances()(0, 2) == Distance::unreachable());
  CHECK(Distance(1000) < Distance::unreachable());
  try {
    (void)g.distances().hops(0, 3);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::disconnected);
  }
}

TEST_CASE("antipodal pair on C6") {
  const auto g = gen::cycle_graph(6);
  CHECK(g.distances()(0, 3) == Distance(3));
}

TEST_CASE("weak diameter") {
  const auto c6 = gen::cycle_graph(6);
  CHECK(weak_diameter(c6, set({2})) == Distance(0));
  CHECK(weak_diameter(c6, set({1, 2, 3})) == Distance(2));
  // C6 with two edges removed leaves two paths.
  const auto split = oracle::graph(6, {{1, 2}, {2, 3}, {4, 5}, {5, 6}});
  CHECK(weak_diameter(split, set({1, 4})) == Distance::unreachable());
  CHECK_THROWS_AS(weak_diameter(c6, VertexSet{}), Error);
}

TEST_CASE("weak diameter is measured in the host graph") {
  // {v1, v3} is disconnected as an induced subgraph but at distance 2.
  const auto p3 = gen::path_graph(3);
  CHECK(weak_diameter(p3, set({1, 3})) == Distance(2));
}

TEST_CASE("power graph") {
  const auto c6 = gen::cycle_graph(6);
  const auto all = all_vertices(c6);
  CHECK(power_graph(c6, 1, all) == c6);
  const auto sq = power_graph(c6, 2, all);
  for (Vertex v = 0; v < 6; ++v) CHECK(sq.degree(v) == 4);
  CHECK(power_graph(c6, 5, all) == gen::complete_graph(6));
  CHECK(power_graph(c6, 0, all).size() == 0);
}

TEST_CASE("power graph matches the distance table") {
  gen::Rng rng(7);
  for (int round = 0; round < 30; ++round) {
    const auto g = oracle::random_any(9, 0.25, rng);
    const auto d = oracle::floyd(g);
    const auto s = oracle::random_subset(9, rng);
    const int r = static_cast<int>(rng.below(4));
    const auto p = power_graph(g, r, s);
    REQUIRE(p.order() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        const bool close = d[static_cast<std::size_t>(s[i])][static_cast<std::size_t>(s[j])] <= r;
        CHECK(p.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) == close);
      }
    }
  }
}

TEST_CASE("bipartiteness") {
  CHECK(is_bipartite(gen::cycle_graph(6)).bipartite);
  CHECK(is_bipartite(Graph(4)).bipartite);
  const auto c5 = gen::cycle_graph(5);
  const auto r = is_bipartite(c5);
  CHECK_FALSE(r.bipartite);
  REQUIRE(r.odd_cycle.size() % 2 == 1);
  for (std::size_t i = 0; i < r.odd_cycle.size(); ++i) {
    CHECK(c5.adjacent(r.odd_cycle[i], r.odd_cycle[(i + 1) % r.odd_cycle.size()]));
  }
}

TEST_CASE("bipartite side is a proper colouring") {
  gen::Rng rng(11);
  for (int round = 0; round < 40; ++round) {
    const auto g = oracle::random_any(10, 0.2, rng);
    const auto r = is_bipartite(g);
    CHECK(r.bipartite == oracle::colourable(g, 2));
    if (r.bipartite) {
      for (const auto& e : g.edges()) CHECK(r.side[static_cast<std::size_t>(e.u)] != r.side[static_cast<std::size_t>(e.v)]);
    } else {
      CHECK(r.odd_cycle.size() % 2 == 1);
      for (std::size_t i = 0; i < r.odd_cycle.size(); ++i) {
        CHECK(g.adjacent(r.odd_cycle[i], r.odd_cycle[(i + 1) % r.odd_cycle.size()]));
      }
    }
  }
}

TEST_CASE("distances agree with Floyd-Warshall") {
  gen::Rng rng(3);
  for (int round = 0; round < 40; ++round) {
    const auto g = oracle::random_any(12, 0.18, rng);
    const auto d = oracle::floyd(g);
    for (Vertex u = 0; u < 12; ++u) {
      for (Vertex v = 0; v < 12; ++v) {
        const int expect = d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        const auto got = g.distances()(u, v);
        if (expect >= oracle::kInf) {
          CHECK_FALSE(got.reachable());
        } else {
          CHECK(got == Distance(expect));
        }
      }
    }
  }
}

TEST_CASE("construction rejects loops and duplicates") {
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph(3, loop), Error);
  const std::vector<Edge> dup{{0, 1}, {0, 1}};
  CHECK_THROWS_AS(Graph(3, dup), Error);
  const std::vector<Edge> range{{0, 3}};
  CHECK_THROWS_AS(Graph(3, range), Error);
  GraphBuilder b(3);
  CHECK(b.add_edge(0, 1));
  CHECK_FALSE(b.add_edge(1, 0));
  CHECK(std::move(b).build().size() == 1);
}

TEST_CASE("components and induced subgraphs") {
  const auto g = oracle::graph(5, {{1, 2}, {2, 3}, {4, 5}});
  const auto comps = g.components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == set({1, 2, 3}));
  CHECK(comps[1] == set({4, 5}));
  CHECK_FALSE(g.connected());
  const auto sub = induced_subgraph(g, set({1, 3, 4, 5}));
  CHECK(sub.order() == 4);
  CHECK(sub.size() == 1);
  CHECK(sub.adjacent(2, 3));
}

}  // TEST_SUITE
