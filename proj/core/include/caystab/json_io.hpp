#pragma once

#include <string>
#include <string_view>

#include "caystab/graph.hpp"

namespace caystab {

/// Reads the JSON graph format {"n": int, "edges": [[u, v, color], ...]}.
/// Throws ParseError on malformed input.
ColoredGraph graph_from_json(std::string_view text);

/// Writes the JSON graph format with normalized, sorted edges.
std::string graph_to_json(const ColoredGraph& g);

} // namespace caystab
