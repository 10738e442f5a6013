#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ndb/distance.hpp"
#include "ndb/graph.hpp"

namespace ndb {

/// Distance-cell decomposition of the vertex set relative to an edge uv:
/// cell (i, j) holds the vertices at distance i from u and j from v.
/// Only |i - j| <= 1 can occur. The halves W_{u,v} / W_{v,u} are the
/// vertices strictly closer to u / to v; the rest tie.
struct EdgeBalanceProfile {
    int u = 0, v = 0;
    int w_uv_size = 0; ///< |W_{u,v}|, vertices strictly closer to u
    int w_vu_size = 0; ///< |W_{v,u}|, vertices strictly closer to v
    int tie_count = 0;
    bool balanced = false; ///< both halves have size diameter+1
    std::map<std::pair<int, int>, std::vector<int>> cells;
};

struct EdgeBalanceSummary {
    int u = 0, v = 0;
    int closer_u = 0, closer_v = 0, ties = 0;
    bool balanced = false;
};

/// Graph-level distance-balance verdict with per-edge evidence.
struct NdbReport {
    bool connected = false;
    std::optional<int> valency;
    int diameter = 0;
    bool db = false;
    bool ndb = false;
    std::optional<int> gamma; ///< absent for edgeless graphs and non-NDB input
    std::optional<int> edge_regular_lambda;
    bool self_median = false;
    std::vector<EdgeBalanceSummary> per_edge;
};

/// Geodesic x0..xd through an edge x0x1 together with the unique
/// off-geodesic vertex of W_{x1,x0} and its cell index ell
/// (the vertex lies in cell (ell-1, ell) of the edge x1x0).
struct GeodesicProfile {
    std::vector<int> geodesic;
    int ell = 0;
    int u_extra = -1;
};

/// Witness sets for the structural statements about graphs that are
/// NDB with gamma = d+1 and d >= 3.
struct StructuralWitness {
    std::vector<int> set_a;            ///< union over i of N(x_i) in cell (i,i)
    std::vector<int> set_b;            ///< N(x_2) in (2,1) plus N(x_d) in (d,d-1)
    std::vector<int> u_cell_neighbors; ///< N(u) in (ell,ell) u (ell,ell-1), ell >= 3
};

struct ConditionResult {
    std::string name;
    bool passed = false;
};

/// Result of the necessary-condition audit. Graphs outside the
/// hypothesis (connected regular NDB with gamma = d+1) are flagged
/// not applicable and pass vacuously.
struct NecessaryConditions {
    bool applicable = false;
    std::vector<ConditionResult> conditions;
    bool all_passed() const;
};

struct Transmissions {
    std::vector<int> per_vertex; ///< sum of distances to all vertices
    bool self_median = false;
};

/// Vertices strictly closer to u than to v, ascending. Requires u ~ v
/// and a connected graph.
std::vector<int> w_set(const Graph& g, int u, int v);

EdgeBalanceProfile d_cell_partition(const Graph& g, int u, int v);

/// Cross-check of the cell-adjacency containments: every vertex's
/// neighborhood must stay within the cells reachable under the BFS
/// layering, and nonempty off-diagonal cells must have nonempty
/// prefixes. True for every connected graph; false signals a bug.
bool check_cell_adjacency(const Graph& g, int u, int v);

NdbReport analyze(const Graph& g);

/// Common neighbor count when it is edge-independent. Requires a
/// regular graph.
std::optional<int> edge_regular_lambda(const Graph& g);

Transmissions transmissions(const Graph& g);

/// Profile along the lexicographically smallest diametral geodesic
/// starting x0, x1. Requires |W_{x1,x0}| = d+1 (NDB with gamma = d+1).
GeodesicProfile geodesic_profile(const Graph& g, int x0, int x1);

/// Same, for an explicitly chosen geodesic (used to sweep the full
/// ell spectrum over all geodesics).
GeodesicProfile profile_for_geodesic(const Graph& g, std::span<const int> path);

/// All geodesics of length diameter, as vertex sequences.
std::vector<std::vector<int>> diametral_geodesics(const Graph& g);

/// Computes the witness sets and asserts the structural statements
/// (no back-edges from geodesic vertices, |A u B| <= 2, and the
/// ell >= 3 variant). Throws std::logic_error if one fails, since they
/// are theorems for NDB graphs with gamma = d+1, d >= 3.
StructuralWitness structural_witness(const Graph& g, const GeodesicProfile& profile);

NecessaryConditions necessary_conditions(const Graph& g);

} // namespace ndb
