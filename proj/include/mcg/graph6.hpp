#pragma once

#include <string>
#include <string_view>

#include "mcg/graph.hpp"

namespace mcg {

/// Decodes one graph6 line. Trailing newline/CR and a leading ">>graph6<<"
/// header are accepted. The edge list comes out in upper-triangle column
/// order: (0,1), (0,2), (1,2), (0,3), ...
///
/// Throws ParseError (with byte offset) on bytes outside 63..126, a
/// truncated or overlong bit field, or nonzero padding bits.
Graph parse_graph6(std::string_view text);

/// Encodes a simple graph. Throws SerializationError for multigraphs.
std::string to_graph6(const Graph& g);

}  // namespace mcg
