#ifndef HEXFREE_IO_HPP
#define HEXFREE_IO_HPP

#include <string>
#include <vector>

#include "hexfree/graph.hpp"

namespace hexfree {

enum class GraphFormat { dimacs, edgelist };

/// DIMACS .col: header `p edge <n> <m>`, edge lines `e <u> <v>` (1-indexed),
/// `c` comment lines. Edge list: first line `<n>`, then `<u> <v>` pairs
/// (0-indexed), `#` comments. Duplicate edges are deduplicated with a warning
/// pushed to `warnings` (if given); loops are rejected.
Graph read_graph(const std::string& text, GraphFormat format,
                 std::vector<std::string>* warnings = nullptr);

std::string write_graph(const Graph& g, GraphFormat format);

/// Sniffs the format: a `p edge` header means DIMACS, otherwise edge list.
GraphFormat detect_format(const std::string& text);

Graph read_graph_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

} // namespace hexfree

#endif
