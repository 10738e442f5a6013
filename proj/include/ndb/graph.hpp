#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace ndb {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on up to 64 vertices.
/// Adjacency is kept as one 64-bit row per vertex, so neighborhood
/// intersections and BFS frontiers are single word operations.
class Graph {
public:
    static constexpr int max_order = 64;

    /// Builds a graph with exactly the given edges; duplicates collapse.
    /// Throws std::invalid_argument on loops or out-of-range endpoints.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges);

    /// Builds from raw adjacency rows; validates symmetry and irreflexivity.
    static Graph from_rows(int n, std::span<const std::uint64_t> rows);

    int order() const { return n_; }
    int edge_count() const;
    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }

    /// Neighborhood of u as a bitmask over vertices 0..n-1.
    std::uint64_t neighbors(int u) const { return rows_[u]; }
    int degree(int u) const;

    /// All edges as (u,v) with u < v, in row-major order.
    std::vector<Edge> edges() const;

    Graph complement() const;

    /// Subgraph induced on the given vertices, relabeled 0..m-1 in the
    /// order they are listed.
    Graph induced(std::span<const int> vertices) const;

    bool operator==(const Graph&) const = default;

    /// Graph with vertex v renamed to perm[v]; perm must be a permutation
    /// of 0..n-1.
    Graph relabeled(std::span<const int> perm) const;

private:
    Graph(int n, std::vector<std::uint64_t> rows)
        : n_(n), rows_(std::move(rows)) {}

    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

} // namespace ndb
