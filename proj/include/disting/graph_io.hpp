#pragma once

#include <string>

#include "disting/graph.hpp"

namespace disting {

// Plain-text edge-list format:
//   p <vertex_count> <edge_count>
//   e <u> <v>          (one line per edge, 0-indexed endpoints)
// Blank lines and lines starting with '#' are ignored.  Malformed input
// raises parse_error with the 1-based line number.
graph parse_edge_list(const std::string& text);

std::string format_edge_list(const graph& g);

// Resolves a --graph argument: a family shorthand such as "cycle:6" when it
// parses as one, otherwise a path to an edge-list file.
graph graph_from_source(const std::string& source);

}  // namespace disting
