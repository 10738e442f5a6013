#pragma once

#include <array>
#include <compare>
#include <cstdint>

#include "ndb/graph.hpp"

namespace ndb {

/// Orders above this are rejected by the canonical-labeling machinery.
inline constexpr int canonical_order_limit = 16;

/// Relabeling-invariant key: the lexicographically smallest upper-triangle
/// adjacency bitstring over all vertex orderings. Two graphs have equal
/// forms iff they are isomorphic.
struct CanonicalForm {
    int n = 0;
    // Row-major upper-triangle bits, MSB-first, so word-wise comparison
    // equals bitstring comparison. 2 words cover C(16,2) = 120 bits.
    std::array<std::uint64_t, 2> bits{};

    auto operator<=>(const CanonicalForm&) const = default;

    /// Graph carrying the canonical labeling itself.
    Graph to_graph() const;
};

CanonicalForm canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

} // namespace ndb
