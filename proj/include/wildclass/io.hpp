#pragma once

#include <string>

#include "wildclass/digraph.hpp"
#include "wildclass/graph.hpp"
#include "wildclass/group.hpp"
#include "wildclass/lattice.hpp"
#include "wildclass/poset.hpp"

namespace wildclass {

// Text formats are line-oriented with 1-based indices; everything is 0-based
// in memory. Parse errors carry the offending line number in the message.
//
//   .graph  "n m" then m lines "u v"        (undirected edge)
//   .cdg    "N M" then M lines "u v c"      (arc u->v, color c >= 1)
//   .grp    "n" then n rows of n entries    (row i, column j holds i o j)
//   .lat    "N K" then K lines "u v"        (u covered by v; order = closure)

UndirectedGraph parse_graph(const std::string& text);
ColoredDigraph parse_cdg(const std::string& text);
FiniteGroup parse_grp(const std::string& text);
FinitePoset parse_lat(const std::string& text);

std::string serialize_graph(const UndirectedGraph& g);
std::string serialize_cdg(const ColoredDigraph& d);
std::string serialize_grp(const FiniteGroup& g);
// Emits the cover relation of the order.
std::string serialize_lat(const FinitePoset& p);
std::string serialize_lat(const FiniteLattice& l);

// JSON mirrors (same content and 1-based indexing as the text formats).
std::string json_graph(const UndirectedGraph& g);
std::string json_cdg(const ColoredDigraph& d);
std::string json_grp(const FiniteGroup& g);
std::string json_lat(const FinitePoset& p);

UndirectedGraph parse_graph_json(const std::string& text);
ColoredDigraph parse_cdg_json(const std::string& text);
FiniteGroup parse_grp_json(const std::string& text);
FinitePoset parse_lat_json(const std::string& text);

// DOT export: colored digraphs keep their arc colors as edge attributes;
// posets/lattices render as Hasse diagrams (arcs lower -> upper).
std::string dot_graph(const UndirectedGraph& g);
std::string dot_cdg(const ColoredDigraph& d);
std::string dot_hasse(const FinitePoset& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace wildclass
