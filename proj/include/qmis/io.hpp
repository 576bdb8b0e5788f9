#pragma once

#include <string>
#include <string_view>

#include "qmis/graph.hpp"

namespace qmis {

enum class GraphFormat { dimacs, edge_list };

// DIMACS edge format: `c` comment lines, one `p edge n m` header, then `m`
// lines `e u v` with 1-based endpoints. Throws ParseError with the offending
// line number, including when the edge count disagrees with the header.
Graph parse_dimacs(std::string_view text);

// First line `n m`, then `m` lines `u v` with 0-based endpoints. Lines starting
// with `#` are comments.
Graph parse_edge_list(std::string_view text);

std::string write_dimacs(const Graph& g);
std::string write_edge_list(const Graph& g);

// Picks DIMACS when the first meaningful line starts with `c` or `p`.
GraphFormat detect_format(std::string_view text);
Graph parse_graph(std::string_view text, GraphFormat format);

std::string read_text_file(const std::string& path);
Graph load_graph(const std::string& path);

}  // namespace qmis
