#include "ndb/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace ndb {

namespace {

using Colors = std::vector<int>;

// One round of neighborhood refinement. Color ids are re-issued in sorted
// signature order every round, so they are isomorphism-invariant and
// monotone in the previous ids (classes only split, never reorder).
Colors refine(const Graph& g, Colors colors) {
    const int n = g.order();
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (;;) {
        int old_classes = 1 + *std::max_element(colors.begin(), colors.end());
        for (int v = 0; v < n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            s.clear();
            s.push_back(colors[static_cast<std::size_t>(v)]);
            std::uint64_t nb = g.neighbors(v);
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                s.push_back(colors[static_cast<std::size_t>(w)]);
            }
            std::sort(s.begin() + 1, s.end());
        }
        std::vector<std::vector<int>> keys = sig;
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        for (int v = 0; v < n; ++v) {
            auto it = std::lower_bound(keys.begin(), keys.end(),
                                       sig[static_cast<std::size_t>(v)]);
            colors[static_cast<std::size_t>(v)] =
                static_cast<int>(it - keys.begin());
        }
        if (static_cast<int>(keys.size()) == old_classes) return colors;
    }
}

Colors individualize(const Graph& g, const Colors& colors, int v) {
    Colors out(colors.size());
    for (std::size_t i = 0; i < colors.size(); ++i) out[i] = colors[i] * 2;
    out[static_cast<std::size_t>(v)] += 1;
    return refine(g, out);
}

std::array<std::uint64_t, 2> pack_bits(const Graph& g, const std::vector<int>& pos) {
    const int n = g.order();
    std::array<int, canonical_order_limit> at{};
    for (int v = 0; v < n; ++v) at[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])] = v;
    std::array<std::uint64_t, 2> bits{};
    int t = 0;
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q, ++t) {
            if (g.adjacent(at[static_cast<std::size_t>(p)], at[static_cast<std::size_t>(q)]))
                bits[static_cast<std::size_t>(t >> 6)] |= std::uint64_t{1} << (63 - (t & 63));
        }
    }
    return bits;
}

struct CanonSearch {
    const Graph& g;
    int n;
    bool have_best = false;
    std::array<std::uint64_t, 2> best{};
    std::vector<int> best_pos;
    std::vector<std::vector<int>> generators; // automorphisms found en route

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {}

    void record_automorphism(const std::vector<int>& pos) {
        std::vector<int> at(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) at[static_cast<std::size_t>(best_pos[static_cast<std::size_t>(v)])] = v;
        std::vector<int> a(static_cast<std::size_t>(n));
        bool identity = true;
        for (int v = 0; v < n; ++v) {
            a[static_cast<std::size_t>(v)] = at[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])];
            if (a[static_cast<std::size_t>(v)] != v) identity = false;
        }
        if (identity) return;
#ifndef NDEBUG
        for (auto [u, v] : g.edges())
            assert(g.adjacent(a[static_cast<std::size_t>(u)], a[static_cast<std::size_t>(v)]));
#endif
        generators.push_back(std::move(a));
    }

    // Union-find over vertices, seeded from generators fixing `path` pointwise.
    bool orbit_covered(int v, const std::vector<int>& tried,
                       const std::vector<int>& path) {
        if (tried.empty() || generators.empty()) return false;
        std::vector<int> parent(static_cast<std::size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        auto unite = [&](int a, int b) {
            a = find(a);
            b = find(b);
            if (a != b) parent[static_cast<std::size_t>(a)] = b;
        };
        for (const auto& sigma : generators) {
            bool fixes = true;
            for (int p : path)
                if (sigma[static_cast<std::size_t>(p)] != p) { fixes = false; break; }
            if (!fixes) continue;
            for (int u = 0; u < n; ++u) unite(u, sigma[static_cast<std::size_t>(u)]);
        }
        int root = find(v);
        for (int t : tried)
            if (find(t) == root) return true;
        return false;
    }

    void rec(const Colors& colors, std::vector<int>& path) {
        int classes = 1 + *std::max_element(colors.begin(), colors.end());
        if (classes == n) {
            auto bits = pack_bits(g, colors);
            if (!have_best || bits < best) {
                best = bits;
                best_pos = colors;
                have_best = true;
            } else if (bits == best) {
                record_automorphism(colors);
            }
            return;
        }
        // first color id held by more than one vertex
        int target = -1;
        {
            std::array<int, canonical_order_limit> count{};
            for (int c : colors) count[static_cast<std::size_t>(c)]++;
            for (int c = 0; c < classes; ++c)
                if (count[static_cast<std::size_t>(c)] > 1) { target = c; break; }
        }
        std::vector<int> tried;
        for (int v = 0; v < n; ++v) {
            if (colors[static_cast<std::size_t>(v)] != target) continue;
            if (orbit_covered(v, tried, path)) continue;
            tried.push_back(v);
            path.push_back(v);
            rec(individualize(g, colors, v), path);
            path.pop_back();
        }
    }
};

} // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.order() > canonical_order_limit)
        throw std::invalid_argument("canonical form limited to order <= 16");
    CanonSearch search(g);
    Colors start(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> path;
    search.rec(refine(g, start), path);
    return CanonicalForm{g.order(), search.best};
}

Graph CanonicalForm::to_graph() const {
    std::vector<Edge> es;
    int t = 0;
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q, ++t) {
            if ((bits[static_cast<std::size_t>(t >> 6)] >> (63 - (t & 63))) & 1u)
                es.emplace_back(p, q);
        }
    }
    return Graph::from_edges(n, es);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace ndb
