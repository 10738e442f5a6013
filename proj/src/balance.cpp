#include "ndb/balance.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace ndb {

namespace {

void require_edge(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v ||
        !g.adjacent(u, v))
        throw std::invalid_argument("u and v must be adjacent vertices");
}

void require_connected(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("graph must be connected");
}

std::vector<int> mask_to_vertices(std::uint64_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

} // namespace

bool NecessaryConditions::all_passed() const {
    return std::all_of(conditions.begin(), conditions.end(),
                       [](const ConditionResult& c) { return c.passed; });
}

std::vector<int> w_set(const Graph& g, int u, int v) {
    require_edge(g, u, v);
    require_connected(g);
    auto du = bfs_distances(g, u);
    auto dv = bfs_distances(g, v);
    std::vector<int> out;
    for (int x = 0; x < g.order(); ++x)
        if (du[static_cast<std::size_t>(x)] < dv[static_cast<std::size_t>(x)])
            out.push_back(x);
    return out;
}

EdgeBalanceProfile d_cell_partition(const Graph& g, int u, int v) {
    require_edge(g, u, v);
    require_connected(g);
    auto du = bfs_distances(g, u);
    auto dv = bfs_distances(g, v);
    const int d = DistanceMatrix(g).diameter();

    EdgeBalanceProfile p;
    p.u = u;
    p.v = v;
    for (int x = 0; x < g.order(); ++x) {
        int i = du[static_cast<std::size_t>(x)];
        int j = dv[static_cast<std::size_t>(x)];
        if (std::abs(i - j) > 1)
            throw std::logic_error("distance cell with |i-j| > 1");
        p.cells[{i, j}].push_back(x);
    }
    p.w_uv_size = 0;
    p.w_vu_size = 0;
    p.tie_count = 0;
    for (const auto& [key, verts] : p.cells) {
        int sz = static_cast<int>(verts.size());
        if (key.first < key.second)
            p.w_uv_size += sz;
        else if (key.first > key.second)
            p.w_vu_size += sz;
        else
            p.tie_count += sz;
    }
    p.balanced = (p.w_uv_size == d + 1) && (p.w_vu_size == d + 1);
    return p;
}

bool check_cell_adjacency(const Graph& g, int u, int v) {
    require_edge(g, u, v);
    require_connected(g);
    auto du = bfs_distances(g, u);
    auto dv = bfs_distances(g, v);
    const int n = g.order();

    // neighborhood containments: both coordinates move by at most one,
    // and the target cell must itself be feasible
    for (int x = 0; x < n; ++x) {
        std::uint64_t nb = g.neighbors(x);
        while (nb) {
            int z = std::countr_zero(nb);
            nb &= nb - 1;
            if (std::abs(du[static_cast<std::size_t>(z)] - du[static_cast<std::size_t>(x)]) > 1) return false;
            if (std::abs(dv[static_cast<std::size_t>(z)] - dv[static_cast<std::size_t>(x)]) > 1) return false;
            if (std::abs(du[static_cast<std::size_t>(z)] - dv[static_cast<std::size_t>(z)]) > 1) return false;
        }
    }

    // prefix nonemptiness of the off-diagonal chains
    std::vector<int> lower(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> upper(static_cast<std::size_t>(n) + 1, 0);
    int max_lower = -1, max_upper = -1;
    for (int x = 0; x < n; ++x) {
        int i = du[static_cast<std::size_t>(x)];
        int j = dv[static_cast<std::size_t>(x)];
        if (i == j + 1) {
            lower[static_cast<std::size_t>(j)]++;
            max_lower = std::max(max_lower, j);
        } else if (j == i + 1) {
            upper[static_cast<std::size_t>(i)]++;
            max_upper = std::max(max_upper, i);
        }
    }
    for (int i = 0; i <= max_lower; ++i)
        if (lower[static_cast<std::size_t>(i)] == 0) return false;
    for (int i = 0; i <= max_upper; ++i)
        if (upper[static_cast<std::size_t>(i)] == 0) return false;
    return true;
}

std::optional<int> edge_regular_lambda(const Graph& g) {
    if (!regularity(g))
        throw std::invalid_argument("edge regularity needs a regular graph");
    std::optional<int> lambda;
    for (auto [u, v] : g.edges()) {
        int common = std::popcount(g.neighbors(u) & g.neighbors(v));
        if (!lambda)
            lambda = common;
        else if (*lambda != common)
            return std::nullopt;
    }
    return lambda;
}

Transmissions transmissions(const Graph& g) {
    require_connected(g);
    DistanceMatrix dm(g);
    Transmissions t;
    t.per_vertex.resize(static_cast<std::size_t>(g.order()));
    for (int x = 0; x < g.order(); ++x) {
        int sum = 0;
        for (int y = 0; y < g.order(); ++y) sum += dm.at(x, y);
        t.per_vertex[static_cast<std::size_t>(x)] = sum;
    }
    t.self_median = std::all_of(t.per_vertex.begin(), t.per_vertex.end(),
                                [&](int s) { return s == t.per_vertex[0]; });
    return t;
}

NdbReport analyze(const Graph& g) {
    require_connected(g);
    DistanceMatrix dm(g);

    NdbReport r;
    r.connected = true;
    r.valency = regularity(g);
    r.diameter = dm.diameter();

    r.db = true;
    r.ndb = true;
    std::optional<int> common;
    for (auto [u, v] : g.edges()) {
        EdgeBalanceSummary s;
        s.u = u;
        s.v = v;
        for (int x = 0; x < g.order(); ++x) {
            int a = dm.at(x, u), b = dm.at(x, v);
            if (a < b)
                s.closer_u++;
            else if (a > b)
                s.closer_v++;
            else
                s.ties++;
        }
        s.balanced = (s.closer_u == r.diameter + 1) && (s.closer_v == r.diameter + 1);
        if (s.closer_u != s.closer_v) {
            r.db = false;
            r.ndb = false;
        } else if (r.ndb) {
            if (!common)
                common = s.closer_u;
            else if (*common != s.closer_u)
                r.ndb = false;
        }
        r.per_edge.push_back(s);
    }
    if (r.ndb) r.gamma = common; // stays empty for edgeless graphs
    if (r.valency) r.edge_regular_lambda = edge_regular_lambda(g);
    r.self_median = transmissions(g).self_median;
    return r;
}

namespace {

// Lexicographically smallest geodesic x0, x1, ..., xd via DFS in
// ascending vertex order; dist_x0 pins each step to the next BFS layer.
bool extend_geodesic(const Graph& g, const std::vector<int>& dist_x0,
                     std::vector<int>& path, int depth) {
    if (static_cast<int>(path.size()) == depth + 1) return true;
    int cur = path.back();
    int level = static_cast<int>(path.size()) - 1;
    std::uint64_t nb = g.neighbors(cur);
    while (nb) {
        int z = std::countr_zero(nb);
        nb &= nb - 1;
        if (dist_x0[static_cast<std::size_t>(z)] == level + 1) {
            path.push_back(z);
            if (extend_geodesic(g, dist_x0, path, depth)) return true;
            path.pop_back();
        }
    }
    return false;
}

GeodesicProfile profile_from_path(const Graph& g, std::vector<int> path) {
    const int d = static_cast<int>(path.size()) - 1;
    auto w = w_set(g, path[1], path[0]);
    if (static_cast<int>(w.size()) != d + 1)
        throw std::invalid_argument(
            "edge half-set size is not diameter+1; graph is not NDB with "
            "gamma = d+1 at this edge");
    std::set<int> on_path(path.begin() + 1, path.end());
    std::vector<int> off;
    for (int x : w)
        if (!on_path.count(x)) off.push_back(x);
    if (off.size() != 1)
        throw std::invalid_argument(
            "half-set does not consist of the geodesic tail plus one vertex");
    GeodesicProfile p;
    p.geodesic = std::move(path);
    p.u_extra = off[0];
    p.ell = bfs_distances(g, p.geodesic[0])[static_cast<std::size_t>(p.u_extra)];
    return p;
}

} // namespace

GeodesicProfile geodesic_profile(const Graph& g, int x0, int x1) {
    require_edge(g, x0, x1);
    require_connected(g);
    DistanceMatrix dm(g);
    const int d = dm.diameter();
    if (d < 2)
        throw std::invalid_argument("geodesic profile needs diameter >= 2");
    auto dist_x0 = bfs_distances(g, x0);
    std::vector<int> path{x0, x1};
    if (!extend_geodesic(g, dist_x0, path, d))
        throw std::invalid_argument("no geodesic of length d through the edge");
    return profile_from_path(g, std::move(path));
}

GeodesicProfile profile_for_geodesic(const Graph& g, std::span<const int> path) {
    require_connected(g);
    DistanceMatrix dm(g);
    const int d = dm.diameter();
    if (static_cast<int>(path.size()) != d + 1)
        throw std::invalid_argument("path length must equal the diameter");
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.adjacent(path[i], path[i + 1]))
            throw std::invalid_argument("path vertices must be consecutive neighbors");
    if (dm.at(path[0], path[path.size() - 1]) != d)
        throw std::invalid_argument("path endpoints are not at distance d");
    return profile_from_path(g, std::vector<int>(path.begin(), path.end()));
}

std::vector<std::vector<int>> diametral_geodesics(const Graph& g) {
    require_connected(g);
    DistanceMatrix dm(g);
    const int d = dm.diameter();
    std::vector<std::vector<int>> all;
    std::vector<int> path;
    for (int x0 = 0; x0 < g.order(); ++x0) {
        auto dist = bfs_distances(g, x0);
        // DFS over layer-increasing sequences ending in the last layer
        std::vector<int> stack;
        auto rec = [&](auto&& self, int cur) -> void {
            if (static_cast<int>(stack.size()) == d + 1) {
                if (dist[static_cast<std::size_t>(cur)] == d) all.push_back(stack);
                return;
            }
            std::uint64_t nb = g.neighbors(cur);
            int level = static_cast<int>(stack.size()) - 1;
            while (nb) {
                int z = std::countr_zero(nb);
                nb &= nb - 1;
                if (dist[static_cast<std::size_t>(z)] == level + 1) {
                    stack.push_back(z);
                    self(self, z);
                    stack.pop_back();
                }
            }
        };
        stack.push_back(x0);
        rec(rec, x0);
        stack.pop_back();
    }
    return all;
}

StructuralWitness structural_witness(const Graph& g, const GeodesicProfile& profile) {
    require_connected(g);
    auto report = analyze(g);
    const int d = report.diameter;
    if (d < 3)
        throw std::invalid_argument("structural witness needs diameter >= 3");
    if (!report.ndb || !report.gamma || *report.gamma != d + 1)
        throw std::invalid_argument("structural witness needs NDB with gamma = d+1");
    if (static_cast<int>(profile.geodesic.size()) != d + 1)
        throw std::invalid_argument("profile geodesic does not span the diameter");

    const auto& x = profile.geodesic;
    auto d_x1 = bfs_distances(g, x[1]);
    auto d_x0 = bfs_distances(g, x[0]);
    auto cell_of = [&](int z) {
        return std::pair<int, int>(d_x1[static_cast<std::size_t>(z)],
                                   d_x0[static_cast<std::size_t>(z)]);
    };
    auto in_cell = [&](int z, int i, int j) {
        return cell_of(z) == std::pair<int, int>(i, j);
    };

    // no edges between x_i and the cells (i, i-1), (i-1, i-1) for 3 <= i <= d-1
    for (int i = 3; i <= d - 1; ++i) {
        std::uint64_t nb = g.neighbors(x[static_cast<std::size_t>(i)]);
        while (nb) {
            int z = std::countr_zero(nb);
            nb &= nb - 1;
            if (in_cell(z, i, i - 1) || in_cell(z, i - 1, i - 1))
                throw std::logic_error("geodesic vertex has a forbidden back-edge");
        }
    }
    // x_2 sees at most one vertex of (1,1) u (2,1)
    {
        int hits = 0;
        std::uint64_t nb = g.neighbors(x[2]);
        while (nb) {
            int z = std::countr_zero(nb);
            nb &= nb - 1;
            if (in_cell(z, 1, 1) || in_cell(z, 2, 1)) ++hits;
        }
        if (hits > 1)
            throw std::logic_error("x2 has two neighbors in the trailing cells");
    }

    StructuralWitness w;
    std::set<int> a_set, b_set, ab;
    for (int i = 2; i <= d; ++i) {
        std::uint64_t nb = g.neighbors(x[static_cast<std::size_t>(i)]);
        while (nb) {
            int z = std::countr_zero(nb);
            nb &= nb - 1;
            if (in_cell(z, i, i)) a_set.insert(z);
        }
    }
    {
        std::uint64_t nb = g.neighbors(x[2]);
        while (nb) {
            int z = std::countr_zero(nb);
            nb &= nb - 1;
            if (in_cell(z, 2, 1)) b_set.insert(z);
        }
        nb = g.neighbors(x[static_cast<std::size_t>(d)]);
        while (nb) {
            int z = std::countr_zero(nb);
            nb &= nb - 1;
            if (in_cell(z, d, d - 1)) b_set.insert(z);
        }
    }
    w.set_a.assign(a_set.begin(), a_set.end());
    w.set_b.assign(b_set.begin(), b_set.end());
    ab = a_set;
    ab.insert(b_set.begin(), b_set.end());
    if (ab.size() > 2)
        throw std::logic_error("witness sets A u B exceed two vertices");

    if (profile.ell >= 3) {
        std::set<int> u_nb;
        std::uint64_t nb = g.neighbors(profile.u_extra);
        while (nb) {
            int z = std::countr_zero(nb);
            nb &= nb - 1;
            if (in_cell(z, profile.ell, profile.ell) ||
                in_cell(z, profile.ell, profile.ell - 1))
                u_nb.insert(z);
        }
        w.u_cell_neighbors.assign(u_nb.begin(), u_nb.end());
        ab.insert(u_nb.begin(), u_nb.end());
        if (ab.size() != 1)
            throw std::logic_error("witness union is not a single vertex");
    }
    return w;
}

NecessaryConditions necessary_conditions(const Graph& g) {
    NecessaryConditions out;
    if (!is_connected(g)) return out;
    auto report = analyze(g);
    const int d = report.diameter;
    if (!report.valency || !report.ndb || !report.gamma || *report.gamma != d + 1)
        return out;
    out.applicable = true;
    const int k = *report.valency;

    auto edges = g.edges();
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) dist[static_cast<std::size_t>(v)] = bfs_distances(g, v);
    auto cell_size = [&](int u, int v, int i, int j) {
        int c = 0;
        for (int x = 0; x < g.order(); ++x)
            if (dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(x)] == i &&
                dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)] == j)
                ++c;
        return c;
    };
    auto every_edge = [&](auto&& pred) {
        return std::all_of(edges.begin(), edges.end(),
                           [&](const Edge& e) { return pred(e.first, e.second); });
    };

    out.conditions.push_back(
        {"d12-equals-d21", every_edge([&](int u, int v) {
             return cell_size(u, v, 1, 2) == cell_size(u, v, 2, 1);
         })});

    if (d >= 3) {
        out.conditions.push_back({"valency-in-3-4-5", k >= 3 && k <= 5});
        bool dv = (k == 3 && d >= 3 && d <= 5) || (k == 4 && (d == 3 || d == 4)) ||
                  (k == 5 && d == 3);
        out.conditions.push_back({"diameter-valency-pairs", dv});
    }
    if (d == 3) {
        bool ecc3 = true;
        DistanceMatrix dm(g);
        for (int v = 0; v < g.order(); ++v)
            if (dm.eccentricity(v) != 3) ecc3 = false;
        out.conditions.push_back({"all-eccentricities-3", ecc3});

        out.conditions.push_back(
            {"d23-d32-nonempty-equal", every_edge([&](int u, int v) {
                 int a = cell_size(u, v, 2, 3), b = cell_size(u, v, 3, 2);
                 return a == b && a != 0;
             })});
        if (k >= 3 && k <= 5) {
            out.conditions.push_back(
                {"d12-d21-size-2", every_edge([&](int u, int v) {
                     return cell_size(u, v, 1, 2) == 2 && cell_size(u, v, 2, 1) == 2;
                 })});
        }
        if (k == 3) {
            out.conditions.push_back(
                {"triangle-free", every_edge([&](int u, int v) {
                     return cell_size(u, v, 1, 1) == 0;
                 })});
            out.conditions.push_back({"d33-empty", every_edge([&](int u, int v) {
                                          return cell_size(u, v, 3, 3) == 0;
                                      })});
        }
        if (k == 4)
            out.conditions.push_back(
                {"lambda-1", report.edge_regular_lambda == std::optional<int>(1)});
        if (k == 5) {
            out.conditions.push_back(
                {"lambda-2", report.edge_regular_lambda == std::optional<int>(2)});
            bool local_c5 = true;
            for (int v = 0; v < g.order() && local_c5; ++v) {
                auto nbs = mask_to_vertices(g.neighbors(v));
                Graph ind = g.induced(nbs);
                if (ind.order() != 5 || !is_connected(ind) ||
                    regularity(ind) != std::optional<int>(2))
                    local_c5 = false;
            }
            out.conditions.push_back({"local-c5", local_c5});
        }
    }
    return out;
}

} // namespace ndb
