#include "ndb/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace ndb {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 1 || n > max_order)
        throw std::invalid_argument("graph order must be in 1.." +
                                    std::to_string(max_order));
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("loops are not allowed");
        rows[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return Graph(n, std::move(rows));
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(int n, std::span<const std::uint64_t> rows) {
    if (n < 1 || n > max_order)
        throw std::invalid_argument("graph order must be in 1.." +
                                    std::to_string(max_order));
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("row count does not match order");
    const std::uint64_t valid = (n == 64) ? ~std::uint64_t{0}
                                          : (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> copy(rows.begin(), rows.end());
    for (int u = 0; u < n; ++u) {
        if (copy[static_cast<std::size_t>(u)] & ~valid)
            throw std::invalid_argument("adjacency row has bits beyond order");
        if ((copy[static_cast<std::size_t>(u)] >> u) & 1u)
            throw std::invalid_argument("adjacency row has a loop");
        for (int v = u + 1; v < n; ++v) {
            bool uv = (copy[static_cast<std::size_t>(u)] >> v) & 1u;
            bool vu = (copy[static_cast<std::size_t>(v)] >> u) & 1u;
            if (uv != vu)
                throw std::invalid_argument("adjacency rows are not symmetric");
        }
    }
    return Graph(n, std::move(copy));
}

int Graph::edge_count() const {
    int total = 0;
    for (int u = 0; u < n_; ++u)
        total += std::popcount(rows_[static_cast<std::size_t>(u)]);
    return total / 2;
}

int Graph::degree(int u) const {
    return std::popcount(rows_[static_cast<std::size_t>(u)]);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int u = 0; u < n_; ++u) {
        std::uint64_t above = rows_[static_cast<std::size_t>(u)] >> (u + 1);
        while (above) {
            int v = u + 1 + std::countr_zero(above);
            out.emplace_back(u, v);
            above &= above - 1;
        }
    }
    return out;
}

Graph Graph::complement() const {
    const std::uint64_t valid = (n_ == 64) ? ~std::uint64_t{0}
                                           : (std::uint64_t{1} << n_) - 1;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_));
    for (int u = 0; u < n_; ++u)
        rows[static_cast<std::size_t>(u)] =
            (~rows_[static_cast<std::size_t>(u)] & valid) &
            ~(std::uint64_t{1} << u);
    return Graph(n_, std::move(rows));
}

Graph Graph::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permutation size must equal order");
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (int p : perm) {
        if (p < 0 || p >= n_ || seen[static_cast<std::size_t>(p)])
            throw std::invalid_argument("not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }
    std::vector<Edge> es;
    for (auto [u, v] : edges())
        es.emplace_back(perm[static_cast<std::size_t>(u)],
                        perm[static_cast<std::size_t>(v)]);
    return from_edges(n_, es);
}

Graph Graph::induced(std::span<const int> vertices) const {
    const int m = static_cast<int>(vertices.size());
    if (m < 1)
        throw std::invalid_argument("induced subgraph needs >= 1 vertex");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        int u = vertices[static_cast<std::size_t>(i)];
        if (u < 0 || u >= n_)
            throw std::invalid_argument("induced vertex out of range");
        for (int j = 0; j < m; ++j) {
            if (i != j && adjacent(u, vertices[static_cast<std::size_t>(j)]))
                rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        }
    }
    return Graph(m, std::move(rows));
}

} // namespace ndb
