#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ndb/graph.hpp"

namespace ndb {

Graph cycle(int n);    // n >= 3
Graph complete(int n); // n >= 1

/// Parts occupy consecutive vertex ranges; edges join distinct parts.
Graph complete_multipartite(std::span<const int> parts);
Graph complete_multipartite(std::initializer_list<int> parts);

/// Vertices are m-bit strings, edges join strings at Hamming distance 1.
/// Supported for 1 <= m <= 4.
Graph hypercube(int m);

/// Cycle 0..n-1 plus the n/2 antipodal chords. n even, n >= 6.
Graph mobius_ladder(int n);

/// Two n-cycles joined by a perfect matching. n >= 3.
Graph prism(int n);

/// Quadratic-residue graph on the nine-element field, realized as
/// GF(3)[x]/(x^2+1); vertex a+bx has index 3a+b.
Graph paley9();

/// Kneser graph on the 2-subsets of a 5-set: vertices are the pairs,
/// adjacent when disjoint.
Graph petersen();

Graph icosahedron();

/// Vertices are the edges of g in sorted-endpoint order; adjacency is
/// sharing an endpoint.
Graph line_graph(const Graph& g);

struct AtlasEntry {
    std::string name;
    Graph graph;
    int valency = 0;
    int diameter = 0;
    int gamma = 0;
};

/// The classification members: Petersen, its complement, the tripartite
/// family for t in [t_min, t_max], the 8-vertex Moebius ladder, the
/// 9-vertex quadratic-residue graph, the 3-cube, its line graph, and
/// the icosahedron, each with its expected (valency, diameter, gamma).
std::vector<AtlasEntry> theorem_family(int t_min = 2, int t_max = 4);

/// Stable CLI names: fixed entries plus cycle-N, complete-N, prism-N,
/// mobiusN and ktx3 family patterns.
std::optional<Graph> atlas_lookup(const std::string& name);

/// Names of the fixed atlas entries (families are matched by pattern).
std::vector<std::string> atlas_names();

} // namespace ndb
