#pragma once

#include <string>
#include <string_view>

#include "specgraph/graph.hpp"

namespace specgraph {

/// Largest order representable in the 4-byte graph6 size field.
inline constexpr std::size_t kGraph6MaxOrder = 258047;

/// Decodes one graph6 line (no trailing newline; a trailing '\r' is tolerated).
/// Throws Error with invalid_char, truncated_payload or nonzero_padding.
Graph decode_graph6(std::string_view text);

/// Canonical (shortest size field, zero padded) graph6 encoding.
std::string encode_graph6(const Graph& g);

}  // namespace specgraph
