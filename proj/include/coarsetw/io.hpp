#pragma once

// Flat-file formats. All ids in files are 1-based; comment lines start with
// "c". Parse errors throw Error(parse) with the offending line number.
//
//   .gr    p tw <n> <m>                 then m lines "<u> <v>"
//   .td    s td <#bags> <max_bag> <n>   "b <id> <v>..." lines, then #bags-1 "<i> <j>"
//   .bd    s bd <#nodes> <n>            "e <i> <j>" and "l <node> <vertex>" lines
//   .part  <#parts>                     then one line of vertex ids per part
//   .map   "<g_vertex> <h_vertex>" per source vertex, g_vertex strictly increasing

#include <iosfwd>
#include <string>
#include <string_view>

#include "coarsetw/decomposition.hpp"
#include "coarsetw/graph.hpp"
#include "coarsetw/pipeline.hpp"
#include "coarsetw/quasiiso.hpp"
#include "coarsetw/simwidth.hpp"

namespace coarsetw::io {

Graph parse_graph(std::istream& in);
void emit_graph(std::ostream& out, const Graph& g);

// `shape` is attached to the result; Shape::path additionally requires the
// tree edges to form a path. The graph order in the header is checked
// against `expected_order` when it is non-negative.
TreeDecomposition parse_td(std::istream& in, Shape shape = Shape::tree, long expected_order = -1);
void emit_td(std::ostream& out, const TreeDecomposition& td, std::size_t graph_order);

BranchDecomposition parse_bd(std::istream& in, long expected_order = -1);
void emit_bd(std::ostream& out, const BranchDecomposition& bd);

Partition parse_partition(std::istream& in, std::size_t graph_order);
void emit_partition(std::ostream& out, const Partition& p);

QuasiIsometryMap parse_map(std::istream& in, std::size_t source_order, std::size_t target_order);
void emit_map(std::ostream& out, const QuasiIsometryMap& phi);

// Comma- or space-separated 1-based ids, e.g. "1,2,5".
VertexSet parse_vertex_list(std::string_view text, std::size_t graph_order);

// String conveniences for tests and small tools.
Graph graph_from_string(std::string_view text);
std::string graph_to_string(const Graph& g);
TreeDecomposition td_from_string(std::string_view text, Shape shape = Shape::tree, long expected_order = -1);
std::string td_to_string(const TreeDecomposition& td, std::size_t graph_order);

Graph read_graph_file(const std::string& path);
TreeDecomposition read_td_file(const std::string& path, Shape shape, long expected_order);
BranchDecomposition read_bd_file(const std::string& path, long expected_order);
Partition read_partition_file(const std::string& path, std::size_t graph_order);
QuasiIsometryMap read_map_file(const std::string& path, std::size_t source_order, std::size_t target_order);

}  // namespace coarsetw::io
