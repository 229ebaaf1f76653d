#pragma once

#include <string>
#include <string_view>

#include "augecc/graph.hpp"

namespace augecc {

enum class GraphFormat { EdgeList, Graph6 };

// Edge list: first line n, then one "u v" pair per non-empty line.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph &g);

// graph6 for 1 <= n <= 62 (single header byte). Trailing newline optional.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph &g);

Graph parse_graph(std::string_view text, GraphFormat format);
std::string write_graph(const Graph &g, GraphFormat format);

} // namespace augecc
