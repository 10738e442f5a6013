#include <doctest.h>

#include <stdexcept>

#include <set>

#include "ndb/atlas.hpp"
#include "ndb/balance.hpp"
#include "ndb/canonical.hpp"
#include "ndb/random.hpp"

using namespace ndb;

namespace {

Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
}

int cell_size(const EdgeBalanceProfile& p, int i, int j) {
    auto it = p.cells.find({i, j});
    return it == p.cells.end() ? 0 : static_cast<int>(it->second.size());
}

} // namespace

TEST_CASE("half-sets") {
    CHECK(w_set(complete(3), 0, 1) == std::vector<int>{0});

    Graph p3 = path_graph(3);
    CHECK(w_set(p3, 0, 1) == std::vector<int>{0});
    CHECK(w_set(p3, 1, 0) == std::vector<int>{1, 2});

    // cube with vertices as 3-bit strings: edge 000-001
    Graph q3 = hypercube(3);
    CHECK(w_set(q3, 0, 1) == std::vector<int>{0, 2, 4, 6});

    CHECK_THROWS_AS(w_set(complete(3), 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(w_set(Graph::from_edges(4, {{0, 1}, {2, 3}}), 0, 1),
                    std::invalid_argument);
}

TEST_CASE("distance cell partitions") {
    auto k4 = d_cell_partition(complete(4), 0, 1);
    CHECK(cell_size(k4, 1, 1) == 2);
    CHECK(k4.w_uv_size == 1);
    CHECK(k4.w_vu_size == 1);
    CHECK(k4.tie_count == 2);

    Graph pet = petersen();
    auto [pu, pv] = pet.edges().front();
    auto pp = d_cell_partition(pet, pu, pv);
    CHECK(cell_size(pp, 1, 2) == 2);
    CHECK(cell_size(pp, 2, 1) == 2);
    CHECK(cell_size(pp, 2, 2) == 4);
    CHECK(cell_size(pp, 1, 1) == 0); // triangle-free

    auto c5 = d_cell_partition(cycle(5), 0, 1);
    CHECK(cell_size(c5, 1, 2) == 1);
    CHECK(cell_size(c5, 2, 1) == 1);
    CHECK(cell_size(c5, 2, 2) == 1);
}

TEST_CASE("partition identity and half-set sums agree with the cells") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_connected_graph(rng, 4 + static_cast<int>(rng() % 7));
        for (auto [u, v] : g.edges()) {
            auto p = d_cell_partition(g, u, v);
            CHECK(p.w_uv_size + p.w_vu_size + p.tie_count == g.order());
            // the two routes: direct distance comparison vs cell sums
            CHECK(static_cast<int>(w_set(g, u, v).size()) == p.w_uv_size);
            CHECK(static_cast<int>(w_set(g, v, u).size()) == p.w_vu_size);
            int sum_uv = 0, sum_vu = 0;
            for (const auto& [key, verts] : p.cells) {
                if (key.first < key.second) sum_uv += static_cast<int>(verts.size());
                if (key.first > key.second) sum_vu += static_cast<int>(verts.size());
            }
            CHECK(sum_uv == p.w_uv_size);
            CHECK(sum_vu == p.w_vu_size);
        }
    }
}

TEST_CASE("cell adjacency containments hold on every connected graph") {
    CHECK(check_cell_adjacency(complete(4), 0, 1));
    for (auto [u, v] : petersen().edges()) CHECK(check_cell_adjacency(petersen(), u, v));
    std::mt19937 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_connected_graph(rng, 4 + static_cast<int>(rng() % 7));
        for (auto [u, v] : g.edges()) CHECK(check_cell_adjacency(g, u, v));
    }
}

TEST_CASE("analysis verdicts") {
    auto pet = analyze(petersen());
    CHECK(pet.ndb);
    CHECK(pet.gamma == 3);
    CHECK(pet.diameter == 2);
    CHECK(pet.valency == 3);

    auto pr3 = analyze(prism(3));
    CHECK(pr3.db);
    CHECK_FALSE(pr3.ndb);

    auto c6 = analyze(cycle(6));
    CHECK(c6.ndb);
    CHECK(c6.gamma == 3);
    CHECK(c6.diameter == 3);

    auto k5 = analyze(complete(5));
    CHECK(k5.ndb);
    CHECK(k5.gamma == 1);
    CHECK(k5.diameter == 1);

    // single vertex: vacuously balanced, no gamma to report
    auto k1 = analyze(Graph::from_edges(1, {}));
    CHECK(k1.db);
    CHECK(k1.ndb);
    CHECK_FALSE(k1.gamma.has_value());

    CHECK_THROWS_AS(analyze(Graph::from_edges(4, {{0, 1}, {2, 3}})),
                    std::invalid_argument);
}

TEST_CASE("edge regularity") {
    CHECK(edge_regular_lambda(icosahedron()) == 2);
    CHECK(edge_regular_lambda(line_graph(hypercube(3))) == 1);
    CHECK(edge_regular_lambda(petersen()) == 0);
    CHECK_THROWS_AS(edge_regular_lambda(path_graph(3)), std::invalid_argument);
}

TEST_CASE("transmissions") {
    auto p3 = transmissions(path_graph(3));
    CHECK(p3.per_vertex == std::vector<int>{3, 2, 3});
    CHECK_FALSE(p3.self_median);

    auto pet = transmissions(petersen());
    for (int s : pet.per_vertex) CHECK(s == 15);
    CHECK(pet.self_median);

    CHECK(transmissions(prism(3)).self_median);
}

TEST_CASE("db graphs in the corpus are exactly the self-median ones") {
    // cross-check of a cited equivalence; a counterexample would be worth
    // investigating rather than a broken build
    std::mt19937 rng(43);
    std::vector<Graph> corpus{petersen(),  prism(3),         prism(5),
                              cycle(7),    hypercube(3),     paley9(),
                              path_graph(4), complete(6)};
    for (int trial = 0; trial < 40; ++trial)
        corpus.push_back(random_connected_graph(rng, 4 + static_cast<int>(rng() % 7)));
    for (const Graph& g : corpus) {
        auto r = analyze(g);
        WARN_MESSAGE(r.db == r.self_median,
                     "distance-balanced vs self-median mismatch on a corpus graph");
    }
}

TEST_CASE("geodesic profiles") {
    Graph q3 = hypercube(3);
    auto p = geodesic_profile(q3, 0, 1);
    CHECK(p.geodesic == std::vector<int>{0, 1, 3, 7});
    CHECK(p.u_extra == 5);
    CHECK(p.ell == 2);

    // profile misuse: petersen has gamma = 3 = d+1, so the half-set check
    // passes, but a non-NDB graph's edge must be rejected
    CHECK_THROWS_AS(geodesic_profile(prism(3), 0, 1), std::invalid_argument);

    Graph ico = icosahedron();
    auto all = diametral_geodesics(ico);
    CHECK_FALSE(all.empty());
    std::set<int> ells;
    for (const auto& path : all) {
        auto prof = profile_for_geodesic(ico, path);
        CHECK(prof.ell >= 2);
        CHECK(prof.ell <= 3);
        ells.insert(prof.ell);
        CHECK(prof.u_extra >= 0);
    }
    // full spectrum from the exhaustive sweep: each vertex has a unique
    // antipode, so the off-geodesic vertex can never sit at distance 3
    // from x0 and ell = 2 is the only realized value
    CHECK(ells == std::set<int>{2});

    Graph lq3 = line_graph(q3);
    for (const auto& path : diametral_geodesics(lq3)) {
        auto prof = profile_for_geodesic(lq3, path);
        auto w = w_set(lq3, path[1], path[0]);
        CHECK(w.size() == 4); // d+1 with d=3
        CHECK(prof.ell >= 2);
        CHECK(prof.ell <= 3);
    }
}

TEST_CASE("structural witnesses hold over all diametral geodesics") {
    for (const Graph& g : {hypercube(3), line_graph(hypercube(3)), icosahedron()}) {
        for (const auto& path : diametral_geodesics(g)) {
            auto prof = profile_for_geodesic(g, path);
            auto w = structural_witness(g, prof);
            std::set<int> ab(w.set_a.begin(), w.set_a.end());
            ab.insert(w.set_b.begin(), w.set_b.end());
            CHECK(ab.size() <= 2);
            if (prof.ell >= 3) {
                ab.insert(w.u_cell_neighbors.begin(), w.u_cell_neighbors.end());
                CHECK(ab.size() == 1);
            }
        }
    }
    CHECK_THROWS_AS(structural_witness(petersen(), GeodesicProfile{}),
                    std::invalid_argument); // d = 2
}

TEST_CASE("necessary conditions") {
    auto q3 = necessary_conditions(hypercube(3));
    CHECK(q3.applicable);
    CHECK(q3.all_passed());
    bool saw_triangle_free = false;
    for (const auto& c : q3.conditions)
        if (c.name == "triangle-free") saw_triangle_free = true;
    CHECK(saw_triangle_free);

    auto ico = necessary_conditions(icosahedron());
    CHECK(ico.applicable);
    CHECK(ico.all_passed());
    bool saw_local_c5 = false;
    for (const auto& c : ico.conditions)
        if (c.name == "local-c5") saw_local_c5 = true;
    CHECK(saw_local_c5);

    auto pet = necessary_conditions(petersen());
    CHECK(pet.applicable);
    CHECK(pet.all_passed());
    CHECK(pet.conditions.size() == 1); // only the half-neighborhood count applies

    CHECK_FALSE(necessary_conditions(prism(3)).applicable);
    CHECK_FALSE(necessary_conditions(path_graph(4)).applicable);
    CHECK(necessary_conditions(prism(3)).all_passed()); // vacuous pass
}

TEST_CASE("equal half-neighborhoods on random regular graphs") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 6 + 2 * static_cast<int>(rng() % 4);
        int k = 3 + static_cast<int>(rng() % 2);
        Graph g = random_connected_regular(rng, n, k);
        for (auto [u, v] : g.edges()) {
            auto p = d_cell_partition(g, u, v);
            CHECK(cell_size(p, 1, 2) == cell_size(p, 2, 1));
        }
    }
}
