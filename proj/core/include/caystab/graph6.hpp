#pragma once

#include <string>
#include <string_view>

#include "caystab/graph.hpp"

namespace caystab {

/// Decodes a graph6 string (standard format, short or long vertex-count
/// form). Throws ParseError on malformed input.
ColoredGraph graph6_read(std::string_view text);

/// Encodes a simple graph as graph6, bit-exact per the format definition.
/// Throws UnsupportedFeatureError if the graph has loops or more than one
/// edge color.
std::string graph6_write(const ColoredGraph& g);

} // namespace caystab
