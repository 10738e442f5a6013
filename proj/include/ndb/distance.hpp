#pragma once

#include <optional>
#include <vector>

#include "ndb/graph.hpp"

namespace ndb {

/// All-pairs shortest-path hop counts with derived eccentricities.
/// Unreachable pairs carry the sentinel value n, which is strictly
/// greater than any realizable distance, so comparisons stay integral.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g);

    int order() const { return n_; }
    int unreachable() const { return n_; }
    int at(int u, int v) const {
        return dist_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                     static_cast<std::size_t>(v)];
    }
    int eccentricity(int u) const { return ecc_[static_cast<std::size_t>(u)]; }

    /// Max eccentricity; equals unreachable() when the graph is disconnected.
    int diameter() const { return diameter_; }
    bool connected() const { return connected_; }

private:
    int n_;
    std::vector<int> dist_;
    std::vector<int> ecc_;
    int diameter_;
    bool connected_;
};

/// Hop counts from src to every vertex; unreachable entries are g.order().
std::vector<int> bfs_distances(const Graph& g, int src);

DistanceMatrix distance_matrix(const Graph& g);

bool is_connected(const Graph& g);

/// Common valency k when the graph is regular, nullopt otherwise.
std::optional<int> regularity(const Graph& g);

/// Length of a shortest cycle, nullopt for forests.
std::optional<int> girth(const Graph& g);

} // namespace ndb
