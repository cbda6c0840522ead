#pragma once

#include <string>
#include <string_view>

#include "addpair/graph.hpp"

namespace addpair {

/// Largest order representable with the single-byte graph6 header.
inline constexpr int kGraph6MaxOrder = 62;

/// Parses a graph6 string (one-byte header only). Throws ParseError with the
/// offending byte offset on malformed input.
Graph parse_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

}  // namespace addpair
