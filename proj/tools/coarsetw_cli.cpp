// coarsetw: command-line front end. Every subcommand prints a report on
// stdout (and into the output directory, where it has one) and exits 1 when a
// reported check fails, 2 on invalid input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coarsetw/decomposition.hpp"
#include "coarsetw/error.hpp"
#include "coarsetw/generators.hpp"
#include "coarsetw/io.hpp"
#include "coarsetw/pipeline.hpp"
#include "coarsetw/quasiiso.hpp"
#include "coarsetw/report.hpp"
#include "coarsetw/simwidth.hpp"
#include "coarsetw/solvers.hpp"

namespace fs = std::filesystem;
using namespace coarsetw;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  std::size_t cap = kBagCap;
  std::string shape = "tree";

  Shape td_shape() const { return shape == "path" ? Shape::path : Shape::tree; }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

template <typename Fn>
void write_file(const fs::path& path, Fn&& emit) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::invalid_argument, "cannot write " + path.string());
  emit(out);
}

// Loads inputs while recording their digests in the report.
class Inputs {
 public:
  Inputs(Report& report, const Globals& globals) : report_(report), globals_(globals) {}

  Graph graph(const std::string& name, const std::string& path) {
    report_.add_input(name, slurp(path));
    return io::read_graph_file(path);
  }
  TreeDecomposition td(const std::string& name, const std::string& path, const Graph& g) {
    report_.add_input(name, slurp(path));
    return io::read_td_file(path, globals_.td_shape(), static_cast<long>(g.order()));
  }
  BranchDecomposition bd(const std::string& path, const Graph& g) {
    report_.add_input("bd", slurp(path));
    return io::read_bd_file(path, static_cast<long>(g.order()));
  }
  Partition partition(const std::string& path, const Graph& g) {
    report_.add_input("partition", slurp(path));
    return io::read_partition_file(path, g.order());
  }
  QuasiIsometryMap map(const std::string& name, const std::string& path, const Graph& from, const Graph& to) {
    report_.add_input(name, slurp(path));
    return io::read_map_file(path, from.order(), to.order());
  }

 private:
  Report& report_;
  const Globals& globals_;
};

Json to_ids(const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(v + 1);
  return out;
}

Json bag_metrics_json(const BagMetrics& m) {
  Json bags = Json::array();
  for (const auto& b : m.bags) bags.push_back(Json{{"size", b.size}, {"alpha", b.independence}, {"gamma", b.domination}});
  return bags;
}

int finish(const Report& report, const std::optional<fs::path>& dir = std::nullopt) {
  report.write(std::cout);
  if (dir) write_file(*dir / "report.json", [&](std::ostream& out) { report.write(out); });
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coarse tree-width toolkit: centred decompositions and quasi-isometries"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--seed", globals.seed, "Seed for generators");
  app.add_option("--cap", globals.cap, "Largest bag handed to exact per-bag solvers")->check(CLI::Range(1, 64));
  app.add_option("--shape", globals.shape, "Decomposition shape of .td inputs")
      ->check(CLI::IsMember({"tree", "path"}));

  std::string graph, td, host, host_td, map, map2, mid, part, bd, set, out, family;
  int k = 1, d = 1, c = 1, qmax = 64;
  std::optional<int> budget;
  bool heuristic = false, exact = false, waive = false;
  gen::Params params;
  int exit_code = 0;

  auto need_graph = [&](CLI::App* sub) { sub->add_option("--graph", graph, "Input graph (.gr)")->required(); };
  auto need_td = [&](CLI::App* sub) { sub->add_option("--td", td, "Tree decomposition (.td)")->required(); };

  auto* validate = app.add_subcommand("validate-td", "Check the three decomposition conditions");
  need_graph(validate);
  need_td(validate);
  validate->callback([&] {
    Report r("validate-td");
    Inputs in(r, globals);
    const auto g = in.graph("graph", graph);
    const auto t = in.td("td", td, g);
    const auto v = validate_decomposition(g, t);
    r.set("width", width(t));
    r.set("message", v.message);
    r.add_check(check_true("valid_decomposition", v.ok()));
    exit_code = finish(r);
  });

  auto* metrics = app.add_subcommand("metrics", "Per-bag independence and domination numbers");
  need_graph(metrics);
  need_td(metrics);
  metrics->callback([&] {
    Report r("metrics");
    Inputs in(r, globals);
    const auto g = in.graph("graph", graph);
    const auto t = in.td("td", td, g);
    const auto m = bag_metrics(g, t, globals.cap);
    r.set("width", width(t));
    r.set("independence_number", m.independence_number());
    r.set("domination_number", m.domination_number());
    r.set("bags", bag_metrics_json(m));
    exit_code = finish(r);
  });

  auto* centred = app.add_subcommand("centred-check", "Is every bag (or a set) (k,d)-centred?");
  need_graph(centred);
  centred->add_option("--td", td, "Tree decomposition (.td)");
  centred->add_option("--set", set, "Vertex set, e.g. 1,2,5");
  centred->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  centred->add_option("--d", d)->required()->check(CLI::NonNegativeNumber);
  centred->add_flag("--heuristic", heuristic, "First-fit search; answers yes or unknown");
  centred->callback([&] {
    if (td.empty() == set.empty()) throw Error(Errc::invalid_argument, "give exactly one of --td and --set");
    Report r("centred-check");
    Inputs in(r, globals);
    const auto g = in.graph("graph", graph);
    const CentredOptions opts{heuristic ? CentredMode::heuristic : CentredMode::exact, globals.cap};
    r.set("k", k);
    r.set("d", d);
    auto describe = [](const CentredResult& res) {
      Json parts = Json::array();
      for (const auto& p : res.witness) parts.push_back(to_ids(p));
      return Json{{"verdict", verdict_name(res.verdict)}, {"witness", parts}};
    };
    if (!set.empty()) {
      const auto s = io::parse_vertex_list(set, g.order());
      const auto res = centred_check(g, s, k, d, opts);
      r.set("result", describe(res));
      r.add_check(check_true("centred", res.yes()));
    } else {
      const auto t = in.td("td", td, g);
      const auto res = centred_check_decomposition(g, t, k, d, opts);
      Json bags = Json::array();
      for (const auto& b : res.bags) bags.push_back(describe(b));
      r.set("verdict", verdict_name(res.verdict));
      if (res.first_failure) r.set("first_failure", *res.first_failure + 1);
      r.set("bags", bags);
      r.add_check(check_true("centred", res.yes()));
    }
    exit_code = finish(r);
  });

  auto* aug = app.add_subcommand("augment", "Join bag-sharing pairs at distance <= d");
  need_graph(aug);
  need_td(aug);
  aug->add_option("--d", d)->required()->check(CLI::NonNegativeNumber);
  aug->add_option("-o,--out", out, "Output directory")->required();
  aug->callback([&] {
    Report r("augment");
    Inputs in(r, globals);
    const auto g = in.graph("graph", graph);
    const auto t = in.td("td", td, g);
    const auto a = augment(g, t, d);
    const auto q = qi_constant(g, a.graph, a.map, std::max<int>(2, static_cast<int>(g.order()) + 1));
    const auto m = bag_metrics(a.graph, a.td, globals.cap);
    r.set("d", d);
    r.set("added_edges", a.added.size());
    r.set("identity_constant", q ? Json(*q) : Json(nullptr));
    r.set("independence_number", m.independence_number());
    r.add_check(check_at_most("identity_constant", "d", q.value_or(INT_MAX), std::max(d, 1)));
    const fs::path dir(out);
    write_file(dir / "h.gr", [&](std::ostream& o) { io::emit_graph(o, a.graph); });
    write_file(dir / "h.td", [&](std::ostream& o) { io::emit_td(o, a.td, a.graph.order()); });
    exit_code = finish(r, dir);
  });

  auto* quot = app.add_subcommand("quotient", "Contract the parts of a partition");
  need_graph(quot);
  quot->add_option("--part", part, "Partition (.part)")->required();
  quot->add_option("--d", d, "Measure the quotient map, requiring part diameter < d");
  quot->add_option("-o,--out", out, "Output graph (.gr)")->required();
  quot->callback([&] {
    Report r("quotient");
    Inputs in(r, globals);
    const auto g = in.graph("graph", graph);
    const auto p = in.partition(part, g);
    validate_partition(g, p);
    const auto h = quotient(g, p);
    r.set("parts", p.size());
    r.set("max_part_diameter", max_part_diameter(g, p).hops());
    if (quot->count("--d") > 0) {
      const auto phi = quotient_map(g, p, d);
      r.set("map_constant", *phi.measured_q);
      r.add_check(check_at_most("map_constant", "d", *phi.measured_q, d));
    }
    r.add_check(check_true("quotient_bipartite", is_bipartite(h).bipartite));
    write_file(out, [&](std::ostream& o) { io::emit_graph(o, h); });
    exit_code = finish(r);
  });

  auto* bip = app.add_subcommand("bipartite-partition", "Connected parts with a bipartite quotient");
  need_graph(bip);
  need_td(bip);
  bip->add_option("--budget", budget, "Fail if the largest part diameter exceeds this");
  bip->add_flag("--exact", exact, "Exhaustive minimum-diameter search (n <= 12)");
  bip->add_option("-o,--out", out, "Output partition (.part)")->required();
  bip->callback([&] {
    Report r("bipartite-partition");
    Inputs in(r, globals);
    const auto g = in.graph("graph", graph);
    const auto t = in.td("td", td, g);
    const auto res = exact ? exact_bipartite_partition(g) : bipartite_partition(g, t, budget);
    r.set("exact", res.exact);
    r.set("parts", res.partition.size());
    r.set("max_weak_diameter", res.max_weak_diameter);
    r.set("td_domination", res.td_domination ? Json(*res.td_domination) : Json(nullptr));
    r.add_check(check_true("quotient_bipartite", is_bipartite(quotient(g, res.partition)).bipartite));
    if (budget) r.add_check(check_at_most("max_weak_diameter", "budget", res.max_weak_diameter, *budget));
    write_file(out, [&](std::ostream& o) { io::emit_partition(o, res.partition); });
    exit_code = finish(r);
  });

  auto* push = app.add_subcommand("push-td", "Replace every bag by the parts it meets");
  need_graph(push);
  need_td(push);
  push->add_option("--part", part, "Partition (.part)")->required();
  push->add_option("-o,--out", out, "Output decomposition (.td)")->required();
  push->callback([&] {
    Report r("push-td");
    Inputs in(r, globals);
    const auto g = in.graph("graph", graph);
    const auto t = in.td("td", td, g);
    const auto p = in.partition(part, g);
    const auto pushed = push_decomposition(g, t, p);
    const auto h = quotient(g, p);
    r.set("width_in", width(t));
    r.set("width_out", width(pushed));
    r.add_check(check_true("output_td_valid", validate_decomposition(h, pushed).ok()));
    write_file(out, [&](std::ostream& o) { io::emit_td(o, pushed, h.order()); });
    exit_code = finish(r);
  });

  auto* pipe = app.add_subcommand("pipeline", "(k,d)-centred decomposition to width <= 2k-1");
  need_graph(pipe);
  need_td(pipe);
  pipe->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  pipe->add_option("--d", d)->required()->check(CLI::NonNegativeNumber);
  pipe->add_option("--budget", budget, "Largest allowed partition diameter");
  pipe->add_flag("--waive", waive, "Skip the centred certificate; report measured values only");
  pipe->add_option("-o,--out", out, "Output directory")->required();
  pipe->callback([&] {
    Report r("pipeline");
    Inputs in(r, globals);
    const auto g = in.graph("graph", graph);
    const auto t = in.td("td", td, g);
    PipelineOptions opts;
    opts.verify_centred = !waive;
    opts.budget = budget;
    opts.centred.cap = globals.cap;
    const auto rep = run_pipeline(g, t, k, d, opts);
    describe_pipeline(r, rep);
    const fs::path dir(out);
    write_file(dir / "h.gr", [&](std::ostream& o) { io::emit_graph(o, rep.output); });
    write_file(dir / "h.td", [&](std::ostream& o) { io::emit_td(o, rep.output_td, rep.output.order()); });
    write_file(dir / "map.map", [&](std::ostream& o) { io::emit_map(o, rep.composed_map); });
    exit_code = finish(r, dir);
  });

  auto* pull = app.add_subcommand("pullback", "Lift a host decomposition through a quasi-isometry");
  need_graph(pull);
  pull->add_option("--host", host, "Host graph (.gr)")->required();
  pull->add_option("--map", map, "Map from graph to host (.map)")->required();
  pull->add_option("--host-td", host_td, "Host decomposition (.td)")->required();
  pull->add_option("--c", c, "Quasi-isometry constant")->required()->check(CLI::PositiveNumber);
  pull->add_option("-o,--out", out, "Output decomposition (.td)")->required();
  pull->callback([&] {
    Report r("pullback");
    Inputs in(r, globals);
    const auto g = in.graph("graph", graph);
    const auto h = in.graph("host", host);
    const auto phi = in.map("map", map, g, h);
    const auto th = in.td("host_td", host_td, h);
    const auto lifted = pullback_decomposition(g, h, phi, th, c);
    const int kk = width(th) + 1;
    const int dd = 3 * c * c;
    const auto res = centred_check_decomposition(g, lifted, kk, dd, {CentredMode::exact, globals.cap});
    r.set("c", c);
    r.set("host_width", width(th));
    r.set("width", width(lifted));
    r.set("bounds", Json{{"k+1", kk}, {"3c^2", dd}});
    r.add_check(check_true("output_td_valid", validate_decomposition(g, lifted).ok()));
    r.add_check(check_true("centred(k+1,3c^2)", res.yes()));
    write_file(out, [&](std::ostream& o) { io::emit_td(o, lifted, g.order()); });
    exit_code = finish(r);
  });

  auto* qic = app.add_subcommand("qi-constant", "Smallest q for which a map is a q-quasi-isometry");
  need_graph(qic);
  qic->add_option("--host", host, "Target graph (.gr)")->required();
  qic->add_option("--map", map, "Map (.map)")->required();
  qic->add_option("--qmax", qmax, "Largest constant tried")->check(CLI::PositiveNumber);
  qic->callback([&] {
    Report r("qi-constant");
    Inputs in(r, globals);
    const auto g = in.graph("graph", graph);
    const auto h = in.graph("host", host);
    const auto phi = in.map("map", map, g, h);
    const auto q = qi_constant(g, h, phi, qmax);
    r.set("qmax", qmax);
    r.set("constant", q ? Json(*q) : Json(nullptr));
    r.add_check(check_true("constant_found", q.has_value()));
    exit_code = finish(r);
  });

  auto* comp = app.add_subcommand("compose", "Compose two maps and compare against q(c+2)");
  need_graph(comp);
  comp->add_option("--mid", mid, "Intermediate graph (.gr)")->required();
  comp->add_option("--host", host, "Final graph (.gr)")->required();
  comp->add_option("--map1", map, "Map graph -> mid")->required();
  comp->add_option("--map2", map2, "Map mid -> host")->required();
  comp->add_option("--qmax", qmax, "Largest constant tried")->check(CLI::PositiveNumber);
  comp->add_option("-o,--out", out, "Write the composed map (.map)");
  comp->callback([&] {
    Report r("compose");
    Inputs in(r, globals);
    const auto g = in.graph("graph", graph);
    const auto g1 = in.graph("mid", mid);
    const auto g2 = in.graph("host", host);
    const auto phi1 = measured(g, g1, in.map("map1", map, g, g1), qmax);
    const auto phi2 = measured(g1, g2, in.map("map2", map2, g1, g2), qmax);
    const auto composed = compose(g, g1, g2, phi1, phi2);
    r.set("c", *phi1.measured_q);
    r.set("q", *phi2.measured_q);
    r.set("composed_constant", *composed.map.measured_q);
    r.set("bounds", Json{{"q(c+2)", composed.bound}});
    r.add_check(check_at_most("composed_constant", "q(c+2)", *composed.map.measured_q, composed.bound));
    if (!out.empty()) write_file(out, [&](std::ostream& o) { io::emit_map(o, composed.map); });
    exit_code = finish(r);
  });

  auto* sv = app.add_subcommand("simval", "Largest induced matching across a vertex cut");
  need_graph(sv);
  sv->add_option("--set", set, "Vertex set, e.g. 1,2,5")->required();
  sv->callback([&] {
    Report r("simval");
    Inputs in(r, globals);
    const auto g = in.graph("graph", graph);
    const auto a = io::parse_vertex_list(set, g.order());
    r.set("set", to_ids(a));
    r.set("simval", simval(g, a));
    exit_code = finish(r);
  });

  auto* s2t = app.add_subcommand("sim-to-td", "Tree decomposition from a branch decomposition");
  need_graph(s2t);
  s2t->add_option("--bd", bd, "Branch decomposition (.bd)")->required();
  s2t->add_option("-o,--out", out, "Output decomposition (.td)")->required();
  s2t->callback([&] {
    Report r("sim-to-td");
    Inputs in(r, globals);
    const auto g = in.graph("graph", graph);
    const auto b = in.bd(bd, g);
    const int sw = branch_width_sim(g, b);
    const auto t = sim_to_td(g, b);
    const auto m = bag_metrics(g, t, globals.cap);
    r.set("sim_width", sw);
    r.set("width", width(t));
    r.set("domination_number", m.domination_number());
    r.set("bounds", Json{{"6k", 6 * sw}});
    r.add_check(check_true("output_td_valid", validate_decomposition(g, t).ok()));
    r.add_check(check_at_most("domination_number", "6k", m.domination_number(), std::max(1, 6 * sw)));
    write_file(out, [&](std::ostream& o) { io::emit_td(o, t, g.order()); });
    exit_code = finish(r);
  });

  auto* simp = app.add_subcommand("sim-pipeline", "Sim-width k to treewidth <= 12k-1 up to quasi-isometry");
  need_graph(simp);
  simp->add_option("--bd", bd, "Branch decomposition (.bd)")->required();
  simp->add_option("-o,--out", out, "Output directory")->required();
  simp->callback([&] {
    Report r("sim-pipeline");
    Inputs in(r, globals);
    const auto g = in.graph("graph", graph);
    const auto b = in.bd(bd, g);
    PipelineOptions opts;
    opts.centred.cap = globals.cap;
    const auto rep = simwidth_pipeline(g, b, opts);
    describe_sim_pipeline(r, rep);
    const fs::path dir(out);
    write_file(dir / "sim.td", [&](std::ostream& o) { io::emit_td(o, rep.td, g.order()); });
    write_file(dir / "h.gr", [&](std::ostream& o) { io::emit_graph(o, rep.pipeline.output); });
    write_file(dir / "h.td", [&](std::ostream& o) {
      io::emit_td(o, rep.pipeline.output_td, rep.pipeline.output.order());
    });
    write_file(dir / "map.map", [&](std::ostream& o) { io::emit_map(o, rep.pipeline.composed_map); });
    exit_code = finish(r, dir);
  });

  auto* tw = app.add_subcommand("exact-tw", "Exact treewidth by subset dynamic programming");
  need_graph(tw);
  std::size_t tw_cap = kTreewidthCap;
  tw->add_option("--tw-cap", tw_cap, "Largest graph attempted")->check(CLI::Range(0, 24));
  tw->add_option("-o,--out", out, "Write an optimal decomposition (.td)");
  tw->callback([&] {
    Report r("exact-tw");
    Inputs in(r, globals);
    const auto g = in.graph("graph", graph);
    const auto res = exact_treewidth(g, tw_cap);
    r.set("treewidth", res.width);
    Json order = Json::array();
    for (Vertex v : res.elimination_order) order.push_back(v + 1);
    r.set("elimination_order", order);
    r.add_check(check_true("witness_valid", validate_decomposition(g, res.witness).ok()));
    if (!out.empty()) write_file(out, [&](std::ostream& o) { io::emit_td(o, res.witness, g.order()); });
    exit_code = finish(r);
  });

  auto* gn = app.add_subcommand("gen", "Generate a seeded instance");
  gn->add_option("--family", family, "path, cycle, random-tree, k-tree, k-path, subdivided-k-tree, grid-slice, "
                                     "random-graph, random-branch-decomposition")
      ->required();
  gn->add_option("--n", params.n, "Vertices (base vertices for subdivided-k-tree)");
  gn->add_option("--k", params.k, "Clique size parameter");
  gn->add_option("--s", params.s, "Subdivisions per edge");
  gn->add_option("--rows", params.rows, "Grid rows");
  gn->add_option("--p", params.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gn->add_option("-o,--out", out, "Output directory")->required();
  gn->callback([&] {
    const auto f = gen::family_from_name(family);
    if (!f) throw Error(Errc::invalid_argument, "unknown family '" + family + "'");
    gen::Rng rng(globals.seed);
    const auto inst = gen::generate(*f, params, rng);
    const fs::path dir(out);
    const auto n = inst.graph.order();
    write_file(dir / "g.gr", [&](std::ostream& o) { io::emit_graph(o, inst.graph); });
    if (inst.td) write_file(dir / "g.td", [&](std::ostream& o) { io::emit_td(o, *inst.td, n); });
    if (inst.bd) write_file(dir / "g.bd", [&](std::ostream& o) { io::emit_bd(o, *inst.bd); });
    if (inst.base) {
      write_file(dir / "base.gr", [&](std::ostream& o) { io::emit_graph(o, *inst.base); });
      write_file(dir / "base.td", [&](std::ostream& o) { io::emit_td(o, *inst.base_td, inst.base->order()); });
      write_file(dir / "map.map", [&](std::ostream& o) { io::emit_map(o, *inst.map); });
    }
    Report r("gen");
    r.set("family", gen::family_name(*f));
    r.set("seed", globals.seed);
    r.set("order", n);
    r.set("size", inst.graph.size());
    if (inst.known_constant > 0) r.set("known_constant", inst.known_constant);
    exit_code = finish(r, dir);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
