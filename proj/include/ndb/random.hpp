#pragma once

#include <random>

#include "ndb/graph.hpp"

namespace ndb {

/// Erdos-Renyi sample conditioned on connectivity (rejection).
Graph random_connected_graph(std::mt19937& rng, int n, double p = 0.4);

/// Uniform-ish k-regular sample via the pairing model conditioned on
/// simplicity and connectivity (rejection). Requires n*k even.
Graph random_connected_regular(std::mt19937& rng, int n, int k);

std::vector<int> random_permutation(std::mt19937& rng, int n);

} // namespace ndb
