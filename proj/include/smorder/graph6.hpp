#ifndef SMORDER_GRAPH6_HPP
#define SMORDER_GRAPH6_HPP

#include <string>
#include <string_view>

#include "smorder/graph.hpp"

namespace smorder {

// graph6 short form, n <= 62: header byte n+63, then the upper-triangular
// adjacency bits in column order packed into 6-bit chunks offset by 63.
// Long forms (header '~') are rejected. Throws std::invalid_argument with
// a description on malformed input; trailing whitespace/newline is allowed,
// trailing garbage is not.
Graph parse_graph6(std::string_view text);

std::string emit_graph6(const Graph& g);

// Plain text fixture format: first line "n m", then m lines "u v".
Graph parse_edge_list(std::string_view text);

}  // namespace smorder

#endif
