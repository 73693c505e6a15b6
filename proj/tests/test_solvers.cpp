#include <doctest.h>

#include "coarsetw/error.hpp"
#include "coarsetw/generators.hpp"
#include "coarsetw/solvers.hpp"
#include "oracles.hpp"

using namespace coarsetw;

TEST_SUITE("solvers") {

TEST_CASE("chromatic number examples") {
  CHECK(exact_chromatic_number(gen::cycle_graph(4)) == 2);
  CHECK(exact_chromatic_number(gen::cycle_graph(5)) == 3);
  CHECK(exact_chromatic_number(gen::complete_graph(4)) == 4);
  CHECK(exact_chromatic_number(Graph(5)) == 1);
  CHECK(exact_chromatic_number(Graph(0)) == 0);
}

TEST_CASE("independence number examples") {
  CHECK(exact_independence_number(gen::complete_graph(4)) == 1);
  CHECK(exact_independence_number(gen::cycle_graph(6)) == oracle::alpha(gen::cycle_graph(6)));
  CHECK(exact_independence_number(gen::cycle_graph(6)) == 3);
  CHECK(exact_independence_number(Graph(5)) == 5);
}

TEST_CASE("domination number examples") {
  CHECK(exact_domination_number(gen::star_graph(3)) == 1);
  CHECK(exact_domination_number(gen::cycle_graph(6)) == 2);
  CHECK(oracle::gamma(gen::cycle_graph(6)) == 2);
  CHECK(exact_domination_number(Graph(1)) == 1);
  CHECK_THROWS_AS(exact_domination_number(Graph(0)), Error);
}

TEST_CASE("treewidth examples") {
  gen::Rng rng(5);
  for (int i = 0; i < 5; ++i) CHECK(exact_treewidth(gen::random_tree(9, rng).graph).width == 1);
  const auto c6 = exact_treewidth(gen::cycle_graph(6));
  CHECK(c6.width == 2);
  CHECK(oracle::treewidth(gen::cycle_graph(6)) == 2);
  CHECK(width(c6.witness) == 2);
  CHECK(oracle::valid_decomposition(gen::cycle_graph(6), c6.witness));
  CHECK(exact_treewidth(gen::complete_graph(4)).width == 3);
}

TEST_CASE("caps raise TooLarge") {
  const auto big = gen::path_graph(30);
  try {
    (void)exact_independence_number(big, 20);
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::too_large);
    CHECK(e.value() == 30);
  }
  CHECK_THROWS_AS(exact_treewidth(big), Error);
  CHECK(exact_independence_number(big, 64) == 15);
  CHECK_THROWS_AS(exact_chromatic_number(gen::path_graph(65), 100), Error);
}

TEST_CASE("solvers agree with enumeration on random graphs") {
  gen::Rng rng(2024);
  for (int round = 0; round < 120; ++round) {
    const auto n = 1 + rng.below(10);
    const auto g = oracle::random_any(n, 0.1 * static_cast<double>(1 + rng.below(6)), rng);
    CHECK(exact_independence_number(g) == oracle::alpha(g));
    CHECK(exact_domination_number(g) == oracle::gamma(g));
    CHECK(exact_chromatic_number(g) == oracle::chi(g));
    const auto mis = maximum_independent_set(g);
    CHECK(static_cast<int>(mis.size()) == oracle::alpha(g));
    for (const auto& e : g.edges()) {
      CHECK_FALSE((std::binary_search(mis.begin(), mis.end(), e.u) && std::binary_search(mis.begin(), mis.end(), e.v)));
    }
    const auto dom = minimum_dominating_set(g);
    CHECK(static_cast<int>(dom.size()) == oracle::gamma(g));
    if (n <= 8) {
      const auto tw = exact_treewidth(g);
      CHECK(tw.width == oracle::treewidth(g));
      CHECK(width(tw.witness) == tw.width);
      CHECK(oracle::valid_decomposition(g, tw.witness));
    }
  }
}

TEST_CASE("clique number is alpha of the complement") {
  gen::Rng rng(99);
  for (int round = 0; round < 40; ++round) {
    const auto g = oracle::random_any(9, 0.5, rng);
    GraphBuilder b(9);
    for (Vertex u = 0; u < 9; ++u) {
      for (Vertex v = u + 1; v < 9; ++v) {
        if (!g.adjacent(u, v)) b.add_edge(u, v);
      }
    }
    CHECK(exact_clique_number(g) == oracle::alpha(std::move(b).build()));
  }
}

TEST_CASE("lex-first colouring is the smallest in vertex order") {
  gen::Rng rng(41);
  for (int round = 0; round < 60; ++round) {
    const auto n = 1 + rng.below(7);
    const auto g = oracle::random_any(n, 0.4, rng);
    const int k = 1 + static_cast<int>(rng.below(3));
    // Enumerate all k^n colourings in lexicographic order.
    std::optional<std::vector<int>> first;
    std::vector<int> c(n, 0);
    while (true) {
      bool proper = true;
      for (const auto& e : g.edges()) proper = proper && c[static_cast<std::size_t>(e.u)] != c[static_cast<std::size_t>(e.v)];
      if (proper) {
        first = c;
        break;
      }
      std::size_t i = n;
      while (i > 0 && c[i - 1] == k - 1) c[--i] = 0;
      if (i == 0) break;
      ++c[i - 1];
    }
    CHECK(lex_first_coloring(g, k) == first);
  }
}

TEST_CASE("greedy colouring is proper") {
  gen::Rng rng(8);
  for (int round = 0; round < 20; ++round) {
    const auto g = oracle::random_any(80, 0.1, rng);
    const auto c = greedy_coloring(g);
    for (const auto& e : g.edges()) CHECK(c[static_cast<std::size_t>(e.u)] != c[static_cast<std::size_t>(e.v)]);
  }
}

}  // TEST_SUITE
