#include <doctest.h>

#include <stdexcept>

#include <set>

#include "ndb/atlas.hpp"
#include "ndb/distance.hpp"
#include "ndb/graph.hpp"
#include "ndb/random.hpp"
#include "oracles.hpp"

using namespace ndb;

namespace {

Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
}

int component_count(const Graph& g) {
    int n = g.order();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int comps = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++comps;
        auto d = bfs_distances(g, s);
        for (int v = 0; v < n; ++v)
            if (d[static_cast<std::size_t>(v)] < n) seen[static_cast<std::size_t>(v)] = true;
    }
    return comps;
}

} // namespace

TEST_CASE("edge construction") {
    Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.edge_count() == 3);
    CHECK(k3.adjacent(0, 2));

    Graph lone = Graph::from_edges(1, {});
    CHECK(lone.order() == 1);
    CHECK(lone.edge_count() == 0);

    Graph c4 = Graph::from_edges(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c4.edge_count() == 4); // duplicate collapses

    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("bfs distances") {
    auto c6 = bfs_distances(cycle(6), 0);
    CHECK(c6 == std::vector<int>{0, 1, 2, 3, 2, 1});

    auto k4 = bfs_distances(complete(4), 0);
    CHECK(k4 == std::vector<int>{0, 1, 1, 1});

    Graph pet = petersen();
    for (int v = 0; v < 10; ++v) {
        auto d = bfs_distances(pet, v);
        CHECK(std::count(d.begin(), d.end(), 0) == 1);
        CHECK(std::count(d.begin(), d.end(), 1) == 3);
        CHECK(std::count(d.begin(), d.end(), 2) == 6);
    }
}

TEST_CASE("distance matrix and eccentricities") {
    DistanceMatrix q3(hypercube(3));
    CHECK(q3.diameter() == 3);
    for (int v = 0; v < 8; ++v) CHECK(q3.eccentricity(v) == 3);

    DistanceMatrix ico(icosahedron());
    CHECK(ico.diameter() == 3);
    for (int v = 0; v < 12; ++v) CHECK(ico.eccentricity(v) == 3);

    DistanceMatrix p3(path_graph(3));
    CHECK(p3.eccentricity(0) == 2);
    CHECK(p3.eccentricity(1) == 1);
    CHECK(p3.eccentricity(2) == 2);
    CHECK(p3.diameter() == 2);

    Graph split = Graph::from_edges(4, {{0, 1}, {2, 3}});
    DistanceMatrix dm(split);
    CHECK_FALSE(dm.connected());
    CHECK(dm.diameter() == dm.unreachable());
    CHECK(dm.at(0, 2) == dm.unreachable());
}

TEST_CASE("connectivity") {
    CHECK(is_connected(complete(4)));
    CHECK_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
    CHECK(is_connected(petersen()));
}

TEST_CASE("regularity") {
    CHECK(regularity(petersen()) == 3);
    CHECK(regularity(paley9()) == 4);
    CHECK_FALSE(regularity(path_graph(3)).has_value());
}

TEST_CASE("girth") {
    CHECK(girth(hypercube(3)) == 4);
    CHECK(girth(complete(3)) == 3);
    CHECK_FALSE(girth(path_graph(4)).has_value());
    CHECK(girth(petersen()) == 5);
}

TEST_CASE("complement") {
    CHECK(complete(4).complement().edge_count() == 0);
    Graph cp = petersen().complement();
    CHECK(regularity(cp) == 6);
    CHECK(DistanceMatrix(cp).diameter() == 2);
}

TEST_CASE("relabeling") {
    std::mt19937 rng(7);
    Graph g = petersen();
    auto perm = random_permutation(rng, g.order());
    Graph h = g.relabeled(perm);
    CHECK(h.edge_count() == g.edge_count());
    for (auto [u, v] : g.edges())
        CHECK(h.adjacent(perm[static_cast<std::size_t>(u)],
                         perm[static_cast<std::size_t>(v)]));
}

TEST_CASE("bfs agrees with floyd-warshall on random graphs") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) es.emplace_back(u, v);
        Graph g = Graph::from_edges(n, es);
        auto fw = oracles::floyd_warshall(g);
        DistanceMatrix dm(g);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                CHECK(dm.at(u, v) ==
                      fw[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
    }
}

TEST_CASE("bfs layering across an edge never jumps by more than one") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_connected_graph(rng, 4 + static_cast<int>(rng() % 7));
        DistanceMatrix dm(g);
        for (auto [u, v] : g.edges())
            for (int x = 0; x < g.order(); ++x)
                CHECK(std::abs(dm.at(x, u) - dm.at(x, v)) <= 1);
    }
}

TEST_CASE("girth agrees with the bfs oracle; forests are exactly the acyclic case") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 3 + static_cast<int>(rng() % 7);
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 4 == 0) es.emplace_back(u, v);
        Graph g = Graph::from_edges(n, es);
        CHECK(girth(g) == oracles::girth_bfs(g));
        bool forest = g.edge_count() == g.order() - component_count(g);
        CHECK(forest == !girth(g).has_value());
    }
}

TEST_CASE("double complement is the identity") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_connected_graph(rng, 3 + static_cast<int>(rng() % 8));
        CHECK(g.complement().complement() == g);
    }
}
