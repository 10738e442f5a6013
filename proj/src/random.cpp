#include "ndb/random.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ndb/distance.hpp"

namespace ndb {

Graph random_connected_graph(std::mt19937& rng, int n, double p) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    std::bernoulli_distribution coin(p);
    for (;;) {
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) es.emplace_back(u, v);
        Graph g = Graph::from_edges(n, es);
        if (is_connected(g)) return g;
    }
}

Graph random_connected_regular(std::mt19937& rng, int n, int k) {
    if (n < 1 || k < 0 || k >= n || (n * k) % 2 != 0)
        throw std::invalid_argument("bad (n, k) for a regular sample");
    std::vector<int> stubs;
    for (;;) {
        stubs.clear();
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < k; ++i) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        bool simple = true;
        std::vector<Edge> es;
        for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                simple = false;
                break;
            }
            for (auto [a, b] : es)
                if ((a == u && b == v) || (a == v && b == u)) {
                    simple = false;
                    break;
                }
            if (simple) es.emplace_back(u, v);
        }
        if (!simple) continue;
        Graph g = Graph::from_edges(n, es);
        if (is_connected(g)) return g;
    }
}

std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

} // namespace ndb
