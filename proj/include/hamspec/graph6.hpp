#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hamspec/graph.hpp"

namespace hamspec {

// graph6: size header (n+63 for n <= 62, '~' plus 18 bits up to 258047,
// "~~" plus 36 bits beyond), then the upper triangle in column order
// (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, most significant bit
// first, zero padded, each byte offset by 63.
std::string encode_graph6(const Graph& g);

// Throws Graph6Error with the offending byte offset on malformed input.
// Nonzero padding bits are rejected.
Graph decode_graph6(std::string_view text);

// One graph per line; blank lines and an optional ">>graph6<<" prefix are
// skipped. Errors carry the line number in the message.
std::vector<Graph> read_graph6_stream(std::istream& in);

// Edge-list text: first line "n m", then m lines "u v" (0-based), LF endings.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

}  // namespace hamspec
