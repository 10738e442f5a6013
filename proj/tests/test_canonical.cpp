#include <doctest.h>

#include <stdexcept>

#include <set>

#include "ndb/atlas.hpp"
#include "ndb/canonical.hpp"
#include "ndb/distance.hpp"
#include "ndb/random.hpp"
#include "oracles.hpp"

using namespace ndb;

TEST_CASE("relabelings share a canonical form") {
    Graph a = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Graph b = Graph::from_edges(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(a) != canonical_form(complete(4)));
}

TEST_CASE("cubic order-8 pair: cube vs moebius ladder") {
    Graph q3 = hypercube(3);
    Graph m8 = mobius_ladder(8);
    CHECK(regularity(q3) == 3);
    CHECK(regularity(m8) == 3);
    CHECK(canonical_form(q3) != canonical_form(m8));
    CHECK_FALSE(oracles::brute_isomorphic(q3, m8));
}

TEST_CASE("canonical form is invariant under random relabelings") {
    std::mt19937 rng(23);
    std::vector<Graph> samples{petersen(), hypercube(3), paley9(),
                               complete_multipartite({3, 3}), cycle(9)};
    for (int trial = 0; trial < 10; ++trial)
        samples.push_back(random_connected_graph(rng, 4 + static_cast<int>(rng() % 9)));
    for (const Graph& g : samples) {
        auto form = canonical_form(g);
        for (int i = 0; i < 100; ++i) {
            auto perm = random_permutation(rng, g.order());
            CHECK(canonical_form(g.relabeled(perm)) == form);
        }
        // the canonical representative is itself in the class
        CHECK(canonical_form(form.to_graph()) == form);
    }
}

TEST_CASE("agreement with brute-force search on small pairs") {
    std::mt19937 rng(29);
    std::vector<Graph> corpus;
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5); // orders 3..7
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2 == 0) es.emplace_back(u, v);
        Graph g = Graph::from_edges(n, es);
        corpus.push_back(g);
        corpus.push_back(g.relabeled(random_permutation(rng, n))); // planted pair
    }
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = i + 1; j < corpus.size(); ++j)
            CHECK(is_isomorphic(corpus[i], corpus[j]) ==
                  oracles::brute_isomorphic(corpus[i], corpus[j]));
}

TEST_CASE("named isomorphic pairs") {
    // 3x3 rook construction of the unique srg(9,4,1,2)
    std::vector<Edge> rook;
    auto id = [](int r, int c) { return 3 * r + c; };
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            for (int c2 = c + 1; c2 < 3; ++c2) rook.emplace_back(id(r, c), id(r, c2));
            for (int r2 = r + 1; r2 < 3; ++r2) rook.emplace_back(id(r, c), id(r2, c));
        }
    Graph rook9 = Graph::from_edges(9, rook).relabeled(
        std::vector<int>{4, 7, 2, 0, 8, 3, 6, 1, 5});
    CHECK(is_isomorphic(paley9(), rook9));
    CHECK(oracles::brute_isomorphic(paley9(), rook9));

    CHECK(is_isomorphic(petersen(), petersen().complement().complement()));
    CHECK(is_isomorphic(cycle(5), cycle(5).complement()));
    CHECK_FALSE(is_isomorphic(line_graph(hypercube(3)), line_graph(mobius_ladder(8))));
}

TEST_CASE("highly symmetric graphs stay cheap") {
    CHECK(canonical_form(complete(12)).to_graph().edge_count() == 66);
    CHECK(canonical_form(complete(12).complement()).to_graph().edge_count() == 0);
    CHECK(is_isomorphic(complete_multipartite({3, 3, 3, 3}),
                        complete_multipartite({3, 3, 3, 3})
                            .relabeled(std::vector<int>{11, 3, 7, 0, 4, 8, 1, 5, 9,
                                                        2, 6, 10})));
    CHECK(is_isomorphic(hypercube(4), hypercube(4)));
}

TEST_CASE("exhaustive class counts on small orders") {
    // published counts of graphs up to isomorphism: a collision would
    // undercount, a relabeling-variant form would overcount
    const std::size_t expected[] = {1, 2, 4, 11, 34, 156}; // n = 1..6
    for (int n = 1; n <= 6; ++n) {
        const int bits = n * (n - 1) / 2;
        std::set<CanonicalForm> classes;
        for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
            std::vector<Edge> es;
            int t = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++t)
                    if ((mask >> t) & 1) es.emplace_back(u, v);
            classes.insert(canonical_form(Graph::from_edges(n, es)));
        }
        CHECK(classes.size() == expected[static_cast<std::size_t>(n - 1)]);
    }
}

TEST_CASE("order bound is enforced") {
    CHECK_THROWS_AS(canonical_form(cycle(17)), std::invalid_argument);
}
