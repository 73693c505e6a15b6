#include <doctest.h>

#include "coarsetw/decomposition.hpp"
#include "coarsetw/error.hpp"
#include "coarsetw/generators.hpp"
#include "coarsetw/quasiiso.hpp"
#include "coarsetw/solvers.hpp"
#include "oracles.hpp"

using namespace coarsetw;
using oracle::set;

namespace {

TreeDecomposition td_of(std::vector<VertexSet> bags, std::vector<TreeEdge> edges, Shape shape = Shape::tree) {
  TreeDecomposition td;
  td.shape = shape;
  td.bags = std::move(bags);
  td.tree_edges = std::move(edges);
  return td;
}

}  // namespace

TEST_SUITE("decomposition") {

TEST_CASE("validation examples") {
  const auto p3 = gen::path_graph(3);
  const auto td = td_of({set({1, 2}), set({2, 3})}, {{0, 1}});
  CHECK(validate_decomposition(p3, td).ok());

  const auto tri = oracle::graph(3, {{1, 2}, {2, 3}, {1, 3}});
  const auto bad = validate_decomposition(tri, td);
  CHECK(bad.violation == Violation::edge_uncovered);
  CHECK(bad.edge == Edge{0, 2});

  const auto split = td_of({set({1}), set({2}), set({1})}, {{0, 1}, {1, 2}});
  const auto r = validate_decomposition(Graph(2), split);
  CHECK(r.violation == Violation::trace_disconnected);
  CHECK(r.vertex == 0);
}

TEST_CASE("validation catches missing and out-of-range vertices") {
  const auto p3 = gen::path_graph(3);
  CHECK(validate_decomposition(Graph(3), td_of({set({1, 2})}, {})).violation == Violation::vertex_missing);
  // Edges are checked before vertices.
  CHECK(validate_decomposition(p3, td_of({set({1, 2})}, {})).violation == Violation::edge_uncovered);
  CHECK(validate_decomposition(p3, td_of({set({1, 2, 3}), {7}}, {{0, 1}})).violation ==
        Violation::vertex_out_of_range);
}

TEST_CASE("malformed trees throw") {
  const auto p3 = gen::path_graph(3);
  auto check_malformed = [&](const TreeDecomposition& td) {
    try {
      (void)validate_decomposition(p3, td);
      FAIL("expected MalformedDecomposition");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::malformed_decomposition);
    }
  };
  check_malformed(td_of({set({1, 2}), set({2, 3})}, {}));
  check_malformed(td_of({set({1, 2}), set({2, 3})}, {{0, 2}}));
  check_malformed(td_of({set({1, 2}), set({2, 3}), set({3})}, {{0, 1}, {1, 0}}));
  check_malformed(td_of({set({1, 2, 3}), set({2}), set({3}), set({1})}, {{0, 1}, {0, 2}, {0, 3}}, Shape::path));
}

TEST_CASE("width") {
  CHECK(width(td_of({set({1}), set({2})}, {{0, 1}})) == 0);
  CHECK(width(td_of({set({1, 2}), set({2, 3})}, {{0, 1}})) == 1);
  CHECK(width(exact_treewidth(gen::cycle_graph(6)).witness) == 2);
}

TEST_CASE("bag metrics") {
  const auto k4 = gen::complete_graph(4);
  const auto m = bag_metrics(k4, td_of({all_vertices(k4)}, {}));
  CHECK(m.independence_number() == 1);

  const auto c6 = gen::cycle_graph(6);
  const auto c = bag_metrics(c6, td_of({all_vertices(c6)}, {}));
  CHECK(c.bags[0].independence == 3);
  CHECK(c.bags[0].domination == 2);

  const auto singles = bag_metrics(gen::path_graph(3), td_of({set({1}), set({1, 2}), set({2}), set({2, 3}), set({3})},
                                                             {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
  CHECK(singles.bags[0].independence == 1);
  CHECK(singles.bags[0].domination == 1);
  CHECK(singles.domination_number() == 1);
}

TEST_CASE("bag metrics report the offending bag") {
  const auto g = gen::path_graph(70);
  auto td = gen::path_instance(70).td.value();
  td.bags.push_back(all_vertices(g));
  td.tree_edges.emplace_back(0, static_cast<int>(td.bags.size()) - 1);
  try {
    (void)bag_metrics(g, td);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::too_large);
    CHECK(e.bag() == td.bags.size() - 1);
  }
}

TEST_CASE("centred examples") {
  const auto c6 = gen::cycle_graph(6);
  const auto all = all_vertices(c6);
  CHECK(centred_check(gen::complete_graph(4), all_vertices(gen::complete_graph(4)), 1, 1).yes());
  CHECK(centred_check(c6, all, 1, 2).verdict == Verdict::no);
  const auto two = centred_check(c6, all, 2, 2);
  REQUIRE(two.yes());
  REQUIRE(two.witness.size() == 2);
  CHECK(two.witness[0] == set({1, 2, 3}));
  CHECK(two.witness[1] == set({4, 5, 6}));
  CHECK(centred_check(c6, set({4}), 1, 0).yes());
  CHECK_THROWS_AS(centred_check(c6, VertexSet{}, 1, 1), Error);
  CHECK_THROWS_AS(centred_check(c6, all, 0, 1), Error);
  CHECK_THROWS_AS(centred_check(c6, all, 1, -1), Error);
}

TEST_CASE("centred decomposition examples") {
  const auto p = gen::path_instance(7);
  CHECK(centred_check_decomposition(p.graph, *p.td, 1, 1).yes());
  const auto g = gen::path_graph(3);
  const auto singles = td_of({set({1}), set({1, 2}), set({2}), set({2, 3}), set({3})}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(centred_check_decomposition(g, singles, 1, 1).yes());
  CHECK(centred_check_decomposition(Graph(3), td_of({set({1}), set({2}), set({3})}, {{0, 1}, {1, 2}}), 1, 0).yes());
}

TEST_CASE("pullback of the P3 example is (2,3)-centred") {
  const auto p3 = gen::path_graph(3);
  const auto host_td = td_of({set({1, 2}), set({2, 3})}, {{0, 1}});
  const auto lifted = pullback_decomposition(p3, p3, identity_map(3), host_td, 1);
  CHECK(centred_check_decomposition(p3, lifted, 2, 3).yes());
}

TEST_CASE("exact centred check agrees with partition enumeration") {
  gen::Rng rng(17);
  int yes = 0, no = 0;
  for (int round = 0; round < 200; ++round) {
    const auto n = 2 + rng.below(8);
    const auto g = oracle::random_any(n, 0.3, rng);
    auto s = oracle::random_subset(n, rng);
    if (s.empty()) s.push_back(0);
    const int k = 1 + static_cast<int>(rng.below(3));
    const int d = static_cast<int>(rng.below(4));
    const auto r = centred_check(g, s, k, d);
    const bool expect = oracle::centred(g, s, k, d);
    CHECK(r.yes() == expect);
    (r.yes() ? yes : no)++;
    if (r.yes()) {
      CHECK(r.witness.size() <= static_cast<std::size_t>(k));
      VertexSet covered;
      for (const auto& part : r.witness) {
        CHECK(oracle::weak_diameter(g, part) <= d);
        covered.insert(covered.end(), part.begin(), part.end());
      }
      std::sort(covered.begin(), covered.end());
      CHECK(covered == s);
    }
    const auto h = centred_check(g, s, k, d, {CentredMode::heuristic, kBagCap});
    CHECK(h.verdict != Verdict::no);
    if (h.yes()) CHECK(expect);
  }
  CHECK(yes > 20);
  CHECK(no > 20);
}

TEST_CASE("centred parts is the least feasible k") {
  gen::Rng rng(23);
  for (int round = 0; round < 60; ++round) {
    const auto g = oracle::random_any(8, 0.3, rng);
    const auto s = oracle::random_subset(8, rng);
    const int d = static_cast<int>(rng.below(3));
    const int k = centred_parts(g, s, d);
    if (s.empty()) {
      CHECK(k == 0);
      continue;
    }
    CHECK(oracle::centred(g, s, k, d));
    if (k > 1) CHECK_FALSE(oracle::centred(g, s, k - 1, d));
  }
}

TEST_CASE("elimination orderings give valid decompositions") {
  gen::Rng rng(31);
  for (int round = 0; round < 50; ++round) {
    const auto n = 1 + rng.below(12);
    const auto g = oracle::random_any(n, 0.3, rng);
    std::vector<Vertex> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
    rng.shuffle(order);
    const auto td = decomposition_from_elimination(g, order);
    CHECK(oracle::valid_decomposition(g, td));
    CHECK(validate_decomposition(g, td).ok());
  }
}

TEST_CASE("validation agrees with the independent checker") {
  gen::Rng rng(37);
  for (int round = 0; round < 200; ++round) {
    const auto inst = gen::k_tree(2, 8, rng);
    auto td = gen::coarsen(*inst.td, rng.below(3), rng);
    // Perturb a random bag.
    auto& bag = td.bags[rng.below(td.bags.size())];
    if (rng.coin() && !bag.empty()) {
      bag.erase(bag.begin() + static_cast<std::ptrdiff_t>(rng.below(bag.size())));
    } else {
      bag.push_back(static_cast<Vertex>(rng.below(8)));
      bag = make_vertex_set(bag);
    }
    CHECK(validate_decomposition(inst.graph, td).ok() == oracle::valid_decomposition(inst.graph, td));
  }
}

}  // TEST_SUITE
