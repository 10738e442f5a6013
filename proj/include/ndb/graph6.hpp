#pragma once

#include <string>
#include <string_view>

#include "ndb/graph.hpp"

namespace ndb {

/// Decodes one graph6 line (short form, order 1..62). The header byte is
/// n+63; the upper-triangle bits x01, x02, x12, x03, ... (column-major)
/// follow, packed big-endian into 6-bit groups offset by 63. Strict:
/// rejects truncated payloads, trailing bytes and nonzero padding bits,
/// so emit(parse(s)) == s for every accepted s.
Graph parse_graph6(std::string_view line);

std::string emit_graph6(const Graph& g);

} // namespace ndb
