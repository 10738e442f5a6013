#include "ndb/distance.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ndb {

namespace {

// BFS by frontier masks; girth passes one edge to leave out of the walk.
void bfs_into(const Graph& g, int src, std::uint64_t skip_edge_mask,
              int skip_edge_from, std::vector<int>& out) {
    const int n = g.order();
    out.assign(static_cast<std::size_t>(n), n);
    std::uint64_t visited = std::uint64_t{1} << src;
    std::uint64_t frontier = visited;
    int level = 0;
    out[static_cast<std::size_t>(src)] = 0;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int u = std::countr_zero(f);
            f &= f - 1;
            std::uint64_t nb = g.neighbors(u);
            if (u == skip_edge_from) nb &= ~skip_edge_mask;
            if (skip_edge_mask & (std::uint64_t{1} << u)) {
                // other endpoint of the skipped edge
                nb &= ~(std::uint64_t{1} << skip_edge_from);
            }
            next |= nb;
        }
        next &= ~visited;
        if (!next) break;
        ++level;
        std::uint64_t t = next;
        while (t) {
            int v = std::countr_zero(t);
            t &= t - 1;
            out[static_cast<std::size_t>(v)] = level;
        }
        visited |= next;
        frontier = next;
    }
}

} // namespace

std::vector<int> bfs_distances(const Graph& g, int src) {
    if (src < 0 || src >= g.order())
        throw std::invalid_argument("bfs source out of range");
    std::vector<int> out;
    bfs_into(g, src, 0, -1, out);
    return out;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()) {
    dist_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
    ecc_.resize(static_cast<std::size_t>(n_));
    connected_ = true;
    std::vector<int> row;
    for (int u = 0; u < n_; ++u) {
        bfs_into(g, u, 0, -1, row);
        int e = 0;
        for (int v = 0; v < n_; ++v) {
            dist_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(v)] = row[static_cast<std::size_t>(v)];
            e = std::max(e, row[static_cast<std::size_t>(v)]);
        }
        ecc_[static_cast<std::size_t>(u)] = e;
        if (e == n_) connected_ = false;
    }
    diameter_ = connected_ ? *std::max_element(ecc_.begin(), ecc_.end()) : n_;
}

DistanceMatrix distance_matrix(const Graph& g) { return DistanceMatrix(g); }

bool is_connected(const Graph& g) {
    std::vector<int> row;
    bfs_into(g, 0, 0, -1, row);
    return std::all_of(row.begin(), row.end(),
                       [&](int d) { return d < g.order(); });
}

std::optional<int> regularity(const Graph& g) {
    int k = g.degree(0);
    for (int u = 1; u < g.order(); ++u)
        if (g.degree(u) != k) return std::nullopt;
    return k;
}

std::optional<int> girth(const Graph& g) {
    // Shortest cycle through each edge: remove the edge, take the
    // alternative path length between its endpoints plus one.
    int best = g.order() + 1;
    std::vector<int> row;
    for (auto [u, v] : g.edges()) {
        bfs_into(g, u, std::uint64_t{1} << v, u, row);
        int alt = row[static_cast<std::size_t>(v)];
        if (alt < g.order()) best = std::min(best, alt + 1);
    }
    if (best > g.order()) return std::nullopt;
    return best;
}

} // namespace ndb
