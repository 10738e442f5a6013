#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ndb/graph.hpp"

namespace ndb {

struct GenerateOptions {
    bool connected_only = true;
    int jobs = 1; ///< worker threads; results are identical for any value
};

/// Connected k-regular graphs of order n, one canonically labeled
/// representative per isomorphism class, ascending by canonical form.
/// The search walks the upper-triangle adjacency row by row with degree
/// feasibility pruning and prefix symmetry tests; valencies above
/// (n-1)/2 are generated by complementing the sparse side.
std::vector<Graph> generate_regular(int n, int k, GenerateOptions opts = {});

/// One canonical representative per isomorphism class, ascending.
std::vector<Graph> dedupe_by_canonical(std::span<const Graph> graphs);

struct Predicate {
    std::string name;
    int value = 0;
};

/// Accepts diameter=V, min-girth=V, all-ecc=V, edge-regular-lambda=V,
/// db, ndb, gamma-d-plus-1. Throws on unknown names.
Predicate parse_predicate(std::string_view text);

struct CensusResult {
    long long input_count = 0;
    std::vector<std::pair<std::string, long long>> stage_counts;
    std::vector<Graph> survivors; ///< ascending canonical form
};

CensusResult filter_census(std::span<const Graph> stream,
                           std::span<const Predicate> predicates);

/// Parses one graph6 line per input line; tolerates the conventional
/// >>graph6<< header and blank lines. Throws on malformed lines.
std::vector<Graph> ingest_graph6(std::istream& in);

} // namespace ndb
