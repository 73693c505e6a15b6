#include "coarsetw/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "coarsetw/error.hpp"

namespace coarsetw::io {
namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank, non-comment line split into tokens; false at end of input.
  bool next(std::vector<std::string_view>& tokens) {
    while (std::getline(in_, line_)) {
      ++number_;
      tokens.clear();
      std::size_t pos = 0;
      while (pos < line_.size()) {
        while (pos < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos]))) ++pos;
        const std::size_t start = pos;
        while (pos < line_.size() && !std::isspace(static_cast<unsigned char>(line_[pos]))) ++pos;
        if (pos > start) tokens.emplace_back(line_.data() + start, pos - start);
      }
      if (tokens.empty() || tokens.front() == "c") continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::parse, "line " + std::to_string(number_) + ": " + what).with_value(number_);
  }

  long long integer(std::string_view token) const {
    long long value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end) fail("expected an integer, got '" + std::string(token) + "'");
    return value;
  }

  Vertex vertex(std::string_view token, std::size_t n) const {
    const long long v = integer(token);
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      fail("vertex " + std::string(token) + " outside 1.." + std::to_string(n));
    }
    return static_cast<Vertex>(v - 1);
  }

  std::size_t count(std::string_view token) const {
    const long long v = integer(token);
    if (v < 0) fail("negative count");
    return static_cast<std::size_t>(v);
  }

  long number() const { return number_; }

 private:
  std::istream& in_;
  std::string line_;
  long number_ = 0;
};

template <typename T, typename Fn>
T read_file(const std::string& path, Fn&& parse) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse, "cannot open " + path);
  try {
    return parse(in);
  } catch (const Error& e) {
    throw e.relabel(path);
  }
}

}  // namespace

Graph parse_graph(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string_view> tok;
  if (!reader.next(tok)) reader.fail("missing 'p tw' header");
  if (tok.size() != 4 || tok[0] != "p" || tok[1] != "tw") reader.fail("expected 'p tw <n> <m>'");
  const std::size_t n = reader.count(tok[2]);
  const std::size_t m = reader.count(tok[3]);
  GraphBuilder b(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (!reader.next(tok)) reader.fail("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    if (tok.size() != 2) reader.fail("expected '<u> <v>'");
    const Vertex u = reader.vertex(tok[0], n);
    const Vertex v = reader.vertex(tok[1], n);
    if (u == v) reader.fail("self-loop");
    if (!b.add_edge(u, v)) reader.fail("duplicate edge");
  }
  if (reader.next(tok)) reader.fail("unexpected content after the edge list");
  return std::move(b).build();
}

void emit_graph(std::ostream& out, const Graph& g) {
  out << "p tw " << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

TreeDecomposition parse_td(std::istream& in, Shape shape, long expected_order) {
  LineReader reader(in);
  std::vector<std::string_view> tok;
  if (!reader.next(tok)) reader.fail("missing 's td' header");
  if (tok.size() != 5 || tok[0] != "s" || tok[1] != "td") reader.fail("expected 's td <bags> <max_bag> <n>'");
  const std::size_t bags = reader.count(tok[2]);
  const std::size_t max_bag = reader.count(tok[3]);
  const std::size_t n = reader.count(tok[4]);
  if (expected_order >= 0 && n != static_cast<std::size_t>(expected_order)) {
    reader.fail("decomposition is for " + std::to_string(n) + " vertices, graph has " + std::to_string(expected_order));
  }
  TreeDecomposition td;
  td.shape = shape;
  td.bags.resize(bags);
  std::vector<bool> seen(bags, false);
  std::size_t bag_lines = 0;
  while (reader.next(tok)) {
    if (tok[0] == "b") {
      if (tok.size() < 2) reader.fail("bag line needs an id");
      const long long id = reader.integer(tok[1]);
      if (id < 1 || static_cast<std::size_t>(id) > bags) reader.fail("bag id outside 1.." + std::to_string(bags));
      const auto slot = static_cast<std::size_t>(id - 1);
      if (seen[slot]) reader.fail("duplicate bag " + std::string(tok[1]));
      seen[slot] = true;
      ++bag_lines;
      VertexSet bag;
      for (std::size_t i = 2; i < tok.size(); ++i) bag.push_back(reader.vertex(tok[i], n));
      const auto size = bag.size();
      bag = make_vertex_set(std::move(bag));
      if (bag.size() != size) reader.fail("repeated vertex in bag");
      td.bags[slot] = std::move(bag);
    } else {
      if (tok.size() != 2) reader.fail("expected a tree edge '<i> <j>'");
      const long long a = reader.integer(tok[0]);
      const long long b = reader.integer(tok[1]);
      if (a < 1 || b < 1 || static_cast<std::size_t>(a) > bags || static_cast<std::size_t>(b) > bags) {
        reader.fail("tree edge references an unknown bag");
      }
      td.tree_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
    }
  }
  if (bag_lines != bags) reader.fail("expected " + std::to_string(bags) + " bags, found " + std::to_string(bag_lines));
  if (static_cast<long>(max_bag) != width(td) + 1 && !(bags == 0 && max_bag == 0)) {
    reader.fail("header max bag size " + std::to_string(max_bag) + " does not match bags");
  }
  check_tree_structure(td);
  return td;
}

void emit_td(std::ostream& out, const TreeDecomposition& td, std::size_t graph_order) {
  out << "s td " << td.node_count() << ' ' << std::max(width(td) + 1, 0) << ' ' << graph_order << '\n';
  for (std::size_t t = 0; t < td.node_count(); ++t) {
    out << "b " << t + 1;
    for (Vertex v : td.bags[t]) out << ' ' << v + 1;
    out << '\n';
  }
  for (const auto& [a, b] : td.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

BranchDecomposition parse_bd(std::istream& in, long expected_order) {
  LineReader reader(in);
  std::vector<std::string_view> tok;
  if (!reader.next(tok)) reader.fail("missing 's bd' header");
  if (tok.size() != 4 || tok[0] != "s" || tok[1] != "bd") reader.fail("expected 's bd <nodes> <n>'");
  BranchDecomposition bd;
  bd.node_count = reader.count(tok[2]);
  const std::size_t n = reader.count(tok[3]);
  if (expected_order >= 0 && n != static_cast<std::size_t>(expected_order)) {
    reader.fail("branch decomposition is for " + std::to_string(n) + " vertices, graph has " +
                std::to_string(expected_order));
  }
  bd.leaf_of.assign(n, -1);
  auto node = [&](std::string_view t) {
    const long long id = reader.integer(t);
    if (id < 1 || static_cast<std::size_t>(id) > bd.node_count) reader.fail("unknown tree node " + std::string(t));
    return static_cast<int>(id - 1);
  };
  while (reader.next(tok)) {
    if (tok.size() != 3) reader.fail("expected 'e <i> <j>' or 'l <node> <vertex>'");
    if (tok[0] == "e") {
      bd.tree_edges.emplace_back(node(tok[1]), node(tok[2]));
    } else if (tok[0] == "l") {
      const int t = node(tok[1]);
      const Vertex v = reader.vertex(tok[2], n);
      if (bd.leaf_of[static_cast<std::size_t>(v)] >= 0) reader.fail("vertex " + std::string(tok[2]) + " has two leaves");
      bd.leaf_of[static_cast<std::size_t>(v)] = t;
    } else {
      reader.fail("unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (bd.leaf_of[v] < 0) reader.fail("vertex " + std::to_string(v + 1) + " has no leaf line");
  }
  return bd;
}

void emit_bd(std::ostream& out, const BranchDecomposition& bd) {
  out << "s bd " << bd.node_count << ' ' << bd.leaf_of.size() << '\n';
  for (const auto& [a, b] : bd.tree_edges) out << "e " << a + 1 << ' ' << b + 1 << '\n';
  for (std::size_t v = 0; v < bd.leaf_of.size(); ++v) out << "l " << bd.leaf_of[v] + 1 << ' ' << v + 1 << '\n';
}

Partition parse_partition(std::istream& in, std::size_t graph_order) {
  LineReader reader(in);
  std::vector<std::string_view> tok;
  if (!reader.next(tok) || tok.size() != 1) reader.fail("expected the part count");
  const std::size_t count = reader.count(tok[0]);
  std::vector<VertexSet> parts;
  for (std::size_t i = 0; i < count; ++i) {
    if (!reader.next(tok)) reader.fail("expected " + std::to_string(count) + " parts");
    VertexSet part;
    for (auto t : tok) part.push_back(reader.vertex(t, graph_order));
    parts.push_back(std::move(part));
  }
  if (reader.next(tok)) reader.fail("unexpected content after the parts");
  try {
    return Partition::from_parts(graph_order, std::move(parts));
  } catch (const Error& e) {
    reader.fail(e.what());
  }
}

void emit_partition(std::ostream& out, const Partition& p) {
  out << p.size() << '\n';
  for (const auto& part : p.parts) {
    for (std::size_t i = 0; i < part.size(); ++i) out << (i ? " " : "") << part[i] + 1;
    out << '\n';
  }
}

QuasiIsometryMap parse_map(std::istream& in, std::size_t source_order, std::size_t target_order) {
  LineReader reader(in);
  std::vector<std::string_view> tok;
  QuasiIsometryMap phi;
  phi.target_order = target_order;
  while (reader.next(tok)) {
    if (tok.size() != 2) reader.fail("expected '<g_vertex> <h_vertex>'");
    const Vertex v = reader.vertex(tok[0], source_order);
    if (static_cast<std::size_t>(v) != phi.image.size()) {
      reader.fail("source vertices must be listed as 1, 2, ... without gaps");
    }
    phi.image.push_back(reader.vertex(tok[1], target_order));
  }
  if (phi.image.size() != source_order) {
    reader.fail("map covers " + std::to_string(phi.image.size()) + " of " + std::to_string(source_order) + " vertices");
  }
  return phi;
}

void emit_map(std::ostream& out, const QuasiIsometryMap& phi) {
  for (std::size_t v = 0; v < phi.image.size(); ++v) out << v + 1 << ' ' << phi.image[v] + 1 << '\n';
}

VertexSet parse_vertex_list(std::string_view text, std::size_t graph_order) {
  std::string normalised(text);
  std::replace(normalised.begin(), normalised.end(), ',', ' ');
  std::istringstream in(normalised);
  VertexSet out;
  std::string token;
  while (in >> token) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || v < 1 || static_cast<std::size_t>(v) > graph_order) {
      throw Error(Errc::parse, "bad vertex '" + token + "' in list");
    }
    out.push_back(static_cast<Vertex>(v - 1));
  }
  return make_vertex_set(std::move(out));
}

Graph graph_from_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream out;
  emit_graph(out, g);
  return out.str();
}

TreeDecomposition td_from_string(std::string_view text, Shape shape, long expected_order) {
  std::istringstream in{std::string(text)};
  return parse_td(in, shape, expected_order);
}

std::string td_to_string(const TreeDecomposition& td, std::size_t graph_order) {
  std::ostringstream out;
  emit_td(out, td, graph_order);
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  return read_file<Graph>(path, [](std::istream& in) { return parse_graph(in); });
}

TreeDecomposition read_td_file(const std::string& path, Shape shape, long expected_order) {
  return read_file<TreeDecomposition>(path, [&](std::istream& in) { return parse_td(in, shape, expected_order); });
}

BranchDecomposition read_bd_file(const std::string& path, long expected_order) {
  return read_file<BranchDecomposition>(path, [&](std::istream& in) { return parse_bd(in, expected_order); });
}

Partition read_partition_file(const std::string& path, std::size_t graph_order) {
  return read_file<Partition>(path, [&](std::istream& in) { return parse_partition(in, graph_order); });
}

QuasiIsometryMap read_map_file(const std::string& path, std::size_t source_order, std::size_t target_order) {
  return read_file<QuasiIsometryMap>(path,
                                     [&](std::istream& in) { return parse_map(in, source_order, target_order); });
}

}  // namespace coarsetw::io
