#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "ramsey/coloured_graph.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

// Edge list:   "n m\n" then m lines "u v" with 0 <= u < v < n.
// Coloured:    "n m q\n" then m lines "u v c" with 1 <= c <= q.
// graph6:      one line per graph (optional ">>graph6<<" prefix).

void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

void write_coloured(std::ostream& out, const ColouredGraph& g);
ColouredGraph read_coloured(std::istream& in);

std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view line);

/// Edge list or graph6, decided by the first non-blank line.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
ColouredGraph read_coloured_file(const std::string& path);

} // namespace ramsey
