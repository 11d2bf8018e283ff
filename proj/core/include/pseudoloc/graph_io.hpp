#pragma once

#include <string>
#include <string_view>

#include "pseudoloc/graph.hpp"

namespace pseudoloc {

// McKay graph6: N(n) header followed by the upper triangle in column order,
// six bits per byte, biased by 63. An optional ">>graph6<<" prefix and
// trailing whitespace are accepted.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// Plain-text edge list: first data line is n, then one "u v" pair per line.
// '#' starts a comment; blank lines are ignored.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

}  // namespace pseudoloc
