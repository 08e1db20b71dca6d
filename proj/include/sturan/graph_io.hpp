#pragma once

#include <string>
#include <string_view>

#include "sturan/graph.hpp"

namespace sturan {

/// Decodes one graph6 record. Accepts the optional ">>graph6<<" header, the
/// multi-byte order prefix, and a single trailing newline.
/// Throws ParseError naming the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Encodes without header or newline. Orders above 62 throw UnsupportedError.
std::string to_graph6(const Graph& g);

/// Edge-list text: "n m" on the first line, then m lines "u v" with u < v < n.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

}  // namespace sturan
