#include <doctest.h>

#include "coarsetw/error.hpp"
#include "coarsetw/generators.hpp"
#include "coarsetw/pipeline.hpp"
#include "coarsetw/solvers.hpp"
#include "oracles.hpp"

using namespace coarsetw;
using oracle::set;

namespace {

TreeDecomposition single_bag(const Graph& g) {
  TreeDecomposition td;
  td.bags = {all_vertices(g)};
  return td;
}

TreeDecomposition p5_bags() {
  TreeDecomposition td;
  td.bags = {set({1, 2, 3}), set({3, 4, 5})};
  td.tree_edges = {{0, 1}};
  return td;
}

bool same_graph_up_to_order(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && a == b;
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("augment examples") {
  const auto p = gen::path_instance(6);
  const auto same = augment(p.graph, *p.td, 1);
  CHECK(same.graph == p.graph);
  CHECK(same.added.empty());

  const auto p5 = gen::path_graph(5);
  const auto aug = augment(p5, p5_bags(), 2);
  CHECK(aug.added == std::vector<Edge>{{0, 2}, {2, 4}});
  CHECK(bag_metrics(aug.graph, aug.td).independence_number() == 1);
  CHECK(qi_constant(p5, aug.graph, aug.map, 5) == 2);

  const auto c6 = gen::cycle_graph(6);
  const auto k6 = augment(c6, single_bag(c6), 3);
  CHECK(k6.graph == gen::complete_graph(6));
  CHECK(qi_constant(c6, k6.graph, k6.map, 5) <= 3);
}

TEST_CASE("augment rejects invalid input") {
  const auto p5 = gen::path_graph(5);
  CHECK_THROWS_AS(augment(p5, p5_bags(), -1), Error);
  CHECK(augment(p5, p5_bags(), 0).graph == p5);
  auto bad = p5_bags();
  bad.bags[1] = set({4, 5});
  CHECK_THROWS_AS(augment(p5, bad, 2), Error);
}

TEST_CASE("quotient examples") {
  const auto c6 = gen::cycle_graph(6);
  CHECK(same_graph_up_to_order(quotient(c6, Partition::singletons(6)), c6));
  const auto pairs = Partition::from_parts(6, {set({1, 2}), set({3, 4}), set({5, 6})});
  CHECK(quotient(c6, pairs) == gen::complete_graph(3));
  CHECK(quotient(c6, Partition::from_parts(6, {all_vertices(c6)})).order() == 1);
  CHECK_THROWS_AS(Partition::from_parts(6, {set({1, 2}), set({2, 3, 4, 5, 6})}), Error);
  CHECK_THROWS_AS(Partition::from_parts(6, {set({1, 2}), set({3, 4, 5})}), Error);
}

TEST_CASE("quotient map examples") {
  const auto c6 = gen::cycle_graph(6);
  CHECK(quotient_map(c6, Partition::singletons(6), 1).measured_q == 1);
  const auto pairs = Partition::from_parts(6, {set({1, 2}), set({3, 4}), set({5, 6})});
  CHECK(*quotient_map(c6, pairs, 2).measured_q <= 2);
  CHECK(*quotient_map(c6, Partition::from_parts(6, {all_vertices(c6)}), 4).measured_q <= 4);
  try {
    (void)quotient_map(c6, Partition::from_parts(6, {all_vertices(c6)}), 3);
    FAIL("expected DiameterExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::diameter_exceeded);
  }
}

TEST_CASE("push decomposition examples") {
  const auto c6 = gen::cycle_graph(6);
  const auto td = single_bag(c6);
  CHECK(push_decomposition(c6, td, Partition::singletons(6)) == td);

  const auto p5 = gen::path_graph(5);
  const auto aug = augment(p5, p5_bags(), 2);
  const auto p = Partition::from_parts(5, {set({1, 2, 3}), set({4, 5})});
  const auto pushed = push_decomposition(aug.graph, aug.td, p);
  const auto q = quotient(aug.graph, p);
  CHECK(validate_decomposition(q, pushed).ok());
  for (const auto& bag : pushed.bags) CHECK(bag.size() <= 2);
  CHECK(bag_metrics(q, pushed).independence_number() <= 1);

  const auto whole = push_decomposition(aug.graph, aug.td, Partition::from_parts(5, {all_vertices(p5)}));
  for (const auto& bag : whole.bags) CHECK(bag == VertexSet{0});
}

TEST_CASE("bipartite partition examples") {
  const auto p = gen::path_instance(6);
  const auto r = bipartite_partition(p.graph, *p.td);
  CHECK(r.partition.size() == 6);
  CHECK(r.max_weak_diameter == 0);

  const auto c5 = gen::cycle_graph(5);
  const auto exact = exact_bipartite_partition(c5);
  CHECK(exact.max_weak_diameter == 1);
  CHECK(exact.partition.parts == std::vector<VertexSet>{set({1, 2}), set({3}), set({4}), set({5})});
  CHECK(quotient(c5, exact.partition) == gen::cycle_graph(4));

  const auto c6 = gen::cycle_graph(6);
  TreeDecomposition c6td = gen::cycle_instance(6).td.value();
  const auto layers = bipartite_partition(c6, c6td);
  CHECK(layers.partition.parts == std::vector<VertexSet>{set({1}), set({2}), set({3}), set({4}), set({5}), set({6})});
  CHECK(is_bipartite(quotient(c6, layers.partition)).bipartite);
  CHECK(layers.td_domination.has_value());
}

TEST_CASE("bipartite partition on an odd cycle merges a layer") {
  const auto c5 = gen::cycle_graph(5);
  const auto r = bipartite_partition(c5, gen::cycle_instance(5).td.value());
  CHECK(r.partition.parts == std::vector<VertexSet>{set({1}), set({2}), set({3, 4}), set({5})});
  CHECK(r.max_weak_diameter == 1);
  try {
    (void)bipartite_partition(c5, gen::cycle_instance(5).td.value(), 0);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::budget_exceeded);
    CHECK(e.value() == 1);
  }
}

TEST_CASE("bipartite partition contract on random graphs") {
  gen::Rng rng(5);
  for (int round = 0; round < 60; ++round) {
    const auto n = 2 + rng.below(11);
    const auto g = oracle::random_connected(n, 0.3, rng);
    const auto td = exact_treewidth(g).witness;
    const auto r = bipartite_partition(g, td);
    const auto q = quotient(g, r.partition);
    CHECK(oracle::colourable(q, 2));
    int worst = 0;
    for (const auto& part : r.partition.parts) {
      CHECK(oracle::connected_set(g, part));
      worst = std::max(worst, oracle::weak_diameter(g, part));
    }
    CHECK(worst == r.max_weak_diameter);
    const auto best = exact_bipartite_partition(g);
    CHECK(best.max_weak_diameter <= r.max_weak_diameter);
    CHECK(oracle::colourable(quotient(g, best.partition), 2));
  }
}

TEST_CASE("ind-to-tw examples") {
  gen::Rng rng(3);
  const auto tree = gen::random_tree(10, rng);
  const auto r = ind_to_tw(tree.graph, *tree.td, 1);
  CHECK(r.partition.partition.size() == 10);
  CHECK(width(r.td) <= 1);

  const auto p5 = gen::path_graph(5);
  const auto aug = augment(p5, p5_bags(), 2);
  CHECK(width(ind_to_tw(aug.graph, aug.td, 1).td) <= 1);

  const auto k6 = gen::complete_graph(6);
  for (const auto& bag : ind_to_tw(k6, single_bag(k6), 1).td.bags) CHECK(bag.size() <= 2);

  const auto c6 = gen::cycle_graph(6);
  CHECK_THROWS_AS(ind_to_tw(c6, single_bag(c6), 2), Error);
}

TEST_CASE("pipeline examples") {
  const auto p = gen::path_instance(8);
  const auto r = run_pipeline(p.graph, *p.td, 1, 1);
  CHECK(r.passed());
  CHECK(r.width_out <= 1);
  CHECK(r.composed_constant <= 3);

  const auto c6 = gen::cycle_graph(6);
  const auto c = run_pipeline(c6, single_bag(c6), 2, 2);
  CHECK(c.passed());
  CHECK(c.width_out <= 3);
  CHECK(c.augment_constant <= 2);
  CHECK(c.composed_constant <= c.composition_bound);
  CHECK(c.composed_constant <= c.claimed_bound);

  const auto p5 = gen::path_graph(5);
  const auto a = run_pipeline(p5, p5_bags(), 1, 2);
  CHECK(a.passed());
  CHECK(a.width_out <= 1);
}

TEST_CASE("pipeline keeps path shape") {
  gen::Rng rng(9);
  for (int round = 0; round < 10; ++round) {
    const auto inst = gen::k_path(2, 10, rng);
    auto td = gen::coarsen(*inst.td, rng.below(3), rng);
    int worst = 1;
    for (const auto& bag : td.bags) worst = std::max(worst, centred_parts(inst.graph, bag, 2));
    const auto r = run_pipeline(inst.graph, td, worst, 2);
    CHECK(r.passed());
    CHECK(r.output_td.shape == Shape::path);
    CHECK(r.width_out <= 2 * worst - 1);
  }
}

TEST_CASE("pipeline refuses uncertified input unless waived") {
  const auto c6 = gen::cycle_graph(6);
  try {
    (void)run_pipeline(c6, single_bag(c6), 1, 2);
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::precondition);
  }
  PipelineOptions waive;
  waive.verify_centred = false;
  const auto r = run_pipeline(c6, single_bag(c6), 1, 2, waive);
  CHECK(r.k_effective >= 1);
  CHECK(r.passed());
}

TEST_CASE("pipeline on disconnected input runs per component") {
  const auto g = oracle::graph(7, {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  TreeDecomposition td;
  td.bags = {set({1, 2}), set({2, 3}), set({4, 5, 6}), set({4, 6, 7})};
  td.tree_edges = {{0, 1}, {1, 2}, {2, 3}};
  const auto r = run_pipeline(g, td, 2, 2);
  CHECK(r.components == 2);
  CHECK(r.composed_constants.size() == 2);
  CHECK(r.passed());
  CHECK(validate_decomposition(r.output, r.output_td).ok());
}

}  // TEST_SUITE
