#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ndb/balance.hpp"
#include "ndb/canonical.hpp"
#include "ndb/generate.hpp"
#include "ndb/graph.hpp"

namespace ndb {

inline constexpr int certificate_schema_version = 1;
inline constexpr const char* generator_version = "orderly-1";

enum class SweepSource { builtin, graph6 };

/// One exhaustive sweep request: all connected regular graphs of the
/// given order, either every valency 2..n-1 or an explicit list.
/// Odd n*k pairs are skipped and noted on the certificate.
struct SweepSpec {
    int n = 0;
    bool all_valencies = true;
    std::vector<int> valencies; ///< used when all_valencies is false
    bool connected_only = true;
    SweepSource source = SweepSource::builtin;
    std::string graph6_path; ///< when source is graph6
};

struct SweepCount {
    int valency = 0;
    long long generated = 0;
    bool skipped_parity = false;
};

struct SurvivorRecord {
    CanonicalForm canon;
    std::string canon_g6; ///< graph6 of the canonical labeling
    int valency = 0;
    NdbReport report;
    std::string atlas_match; ///< classification member name, or UNMATCHED
    NecessaryConditions audit;
};

inline constexpr const char* atlas_unmatched = "UNMATCHED";

/// Desk-scale witness of the classification: per-valency generation
/// counts plus every connected regular graph that is NDB with
/// gamma = d+1, matched against the named members and audited against
/// the necessary conditions.
struct ClassificationCertificate {
    SweepSpec spec;
    std::vector<SweepCount> counts;
    std::vector<SurvivorRecord> survivors; ///< ascending canonical form
    bool all_matched() const;
    bool consistent() const; ///< every audit applicable and passing
    bool ok() const { return all_matched() && consistent(); }
};

ClassificationCertificate verify_classification(const SweepSpec& spec, int jobs = 1);

/// Appends the certificate as JSON lines: one line per (order, valency)
/// with no survivors, one line per survivor otherwise.
void append_certificate_jsonl(std::ostream& out, const ClassificationCertificate& cert);

std::string report_json_string(const NdbReport& report);

} // namespace ndb
