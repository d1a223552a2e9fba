#pragma once

#include <iosfwd>
#include <string>

#include "modcert/graph.hpp"

namespace modcert {

/// Edge-list text format: UTF-8 lines; blank lines ignored; lines starting
/// with '#' are comments except the optional header "#n <count>" which pins
/// the vertex count (otherwise 1 + max index). Every other line holds two
/// whitespace-separated 0-based endpoints of one undirected edge.
Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::string& text);
Graph load_edge_list_file(const std::string& path);

/// One "u v" line per edge with u < v, sorted; parsing the output
/// reproduces the graph.
std::string write_edge_list(const Graph& g);
void save_edge_list_file(const Graph& g, const std::string& path);

}  // namespace modcert
