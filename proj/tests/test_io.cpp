#include <doctest.h>

#include <sstream>

#include "coarsetw/error.hpp"
#include "coarsetw/generators.hpp"
#include "coarsetw/io.hpp"
#include "coarsetw/report.hpp"
#include "coarsetw/solvers.hpp"
#include "oracles.hpp"

using namespace coarsetw;
using oracle::set;

namespace {

long parse_error_line(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    if (e.code() == Errc::parse && e.value()) return static_cast<long>(*e.value());
    return -2;
  }
  return -1;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("graph parsing") {
  const auto k2 = io::graph_from_string("p tw 2 1\n1 2\n");
  CHECK(k2 == gen::path_graph(2));
  const auto commented = io::graph_from_string("c a comment\n\np tw 3 2\nc another\n1 2\n  2   3\n");
  CHECK(commented == gen::path_graph(3));
}

TEST_CASE("graph parse errors carry line numbers") {
  CHECK(parse_error_line([] { (void)io::graph_from_string("p tw 2 1\n1 3\n"); }) == 2);
  CHECK(parse_error_line([] { (void)io::graph_from_string("p tw 3 2\n1 2\n2 1\n"); }) == 3);
  CHECK(parse_error_line([] { (void)io::graph_from_string("p tw 3 1\n2 2\n"); }) == 2);
  CHECK(parse_error_line([] { (void)io::graph_from_string("p tw 3 2\n1 2\n"); }) >= 0);
  CHECK(parse_error_line([] { (void)io::graph_from_string("p td 3 2\n1 2\n"); }) == 1);
  CHECK(parse_error_line([] { (void)io::graph_from_string("p tw 3 1\n1 2 3\n"); }) == 2);
  CHECK(parse_error_line([] { (void)io::graph_from_string("p tw 3 1\n1 x\n"); }) == 2);
}

TEST_CASE("decomposition parsing") {
  const auto td = io::td_from_string("s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n", Shape::tree, 3);
  CHECK(td.bags == std::vector<VertexSet>{set({1, 2}), set({2, 3})});
  CHECK(td.tree_edges == std::vector<TreeEdge>{{0, 1}});
  // Bag referencing vertex n+1.
  CHECK(parse_error_line([] { (void)io::td_from_string("s td 2 2 3\nb 1 1 2\nb 2 2 4\n1 2\n"); }) == 3);
  CHECK(parse_error_line([] { (void)io::td_from_string("s td 2 2 3\nb 1 1 2\nb 1 2 3\n1 2\n"); }) == 3);
  // Declared width disagrees with the bags.
  CHECK(parse_error_line([] { (void)io::td_from_string("s td 2 3 3\nb 1 1 2\nb 2 2 3\n1 2\n"); }) >= 0);
  CHECK_THROWS_AS(io::td_from_string("s td 3 2 3\nb 1 1 2\nb 2 2 3\nb 3 3\n1 2\n1 3\n2 3\n"), Error);
}

TEST_CASE("graph and decomposition round trips") {
  gen::Rng rng(12);
  for (int round = 0; round < 30; ++round) {
    const auto inst = gen::k_tree(1 + static_cast<int>(rng.below(3)), 4 + rng.below(20), rng);
    const auto text = io::graph_to_string(inst.graph);
    CHECK(io::graph_from_string(text) == inst.graph);
    CHECK(io::graph_to_string(io::graph_from_string(text)) == text);
    const auto td_text = io::td_to_string(*inst.td, inst.graph.order());
    const auto td = io::td_from_string(td_text, Shape::tree, static_cast<long>(inst.graph.order()));
    CHECK(td == *inst.td);
    CHECK(io::td_to_string(td, inst.graph.order()) == td_text);
  }
}

TEST_CASE("branch decomposition round trip") {
  gen::Rng rng(3);
  for (int round = 0; round < 20; ++round) {
    const auto g = oracle::random_any(1 + rng.below(12), 0.3, rng);
    const auto bd = gen::random_branch_decomposition(g, rng);
    std::ostringstream out;
    io::emit_bd(out, bd);
    std::istringstream in(out.str());
    const auto back = io::parse_bd(in, static_cast<long>(g.order()));
    CHECK(back == bd);
    std::ostringstream again;
    io::emit_bd(again, back);
    CHECK(again.str() == out.str());
  }
}

TEST_CASE("partition and map round trips") {
  const auto p = Partition::from_parts(6, {set({1, 2}), set({3, 4}), set({5, 6})});
  std::ostringstream out;
  io::emit_partition(out, p);
  CHECK(out.str() == "3\n1 2\n3 4\n5 6\n");
  std::istringstream in(out.str());
  CHECK(io::parse_partition(in, 6).parts == p.parts);

  QuasiIsometryMap phi;
  phi.image = {0, 0, 1, 1, 2};
  phi.target_order = 3;
  std::ostringstream mout;
  io::emit_map(mout, phi);
  CHECK(mout.str() == "1 1\n2 1\n3 2\n4 2\n5 3\n");
  std::istringstream min(mout.str());
  CHECK(io::parse_map(min, 5, 3).image == phi.image);
  std::istringstream bad("1 1\n2 4\n3 2\n4 2\n5 3\n");
  CHECK_THROWS_AS(io::parse_map(bad, 5, 3), Error);
  std::istringstream missing("1 1\n2 1\n");
  CHECK_THROWS_AS(io::parse_map(missing, 5, 3), Error);
}

TEST_CASE("vertex lists") {
  CHECK(io::parse_vertex_list("1,2,5", 6) == set({1, 2, 5}));
  CHECK(io::parse_vertex_list("3 1", 6) == set({1, 3}));
  CHECK_THROWS_AS(io::parse_vertex_list("1,9", 6), Error);
}

TEST_CASE("report serialisation") {
  Report r("demo");
  r.add_input("graph", "p tw 2 1\n1 2\n");
  r.set("k", 2);
  r.add_check(check_at_most("width_out", "2k-1", 3, 3));
  CHECK(r.passed());
  const auto text = r.to_string();
  const auto parsed = Json::parse(text);
  CHECK(parsed["operation"] == "demo");
  CHECK(parsed["k"] == 2);
  CHECK(parsed["checks"][0]["bound_name"] == "2k-1");
  CHECK(parsed["pass"] == true);
  r.add_check(check_at_most("composed", "q(c+2)", 7, 6));
  CHECK_FALSE(r.passed());
  CHECK(Json::parse(r.to_string())["pass"] == false);
  CHECK(fnv1a_digest("") == "fnv1a:cbf29ce484222325");
}

}  // TEST_SUITE
