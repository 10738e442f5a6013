#include "ndb/verify.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "ndb/atlas.hpp"
#include "ndb/distance.hpp"
#include "ndb/graph6.hpp"

namespace ndb {

using nlohmann::json;

bool ClassificationCertificate::all_matched() const {
    return std::all_of(survivors.begin(), survivors.end(), [](const SurvivorRecord& s) {
        return s.atlas_match != atlas_unmatched;
    });
}

bool ClassificationCertificate::consistent() const {
    return std::all_of(survivors.begin(), survivors.end(), [](const SurvivorRecord& s) {
        return s.audit.applicable && s.audit.all_passed();
    });
}

namespace {

std::vector<Graph> sweep_graphs(const SweepSpec& spec, int valency, int jobs) {
    if (spec.source == SweepSource::builtin)
        return generate_regular(spec.n, valency,
                                {.connected_only = spec.connected_only, .jobs = jobs});
    std::ifstream in(spec.graph6_path);
    if (!in) throw std::runtime_error("cannot open graph6 file: " + spec.graph6_path);
    std::vector<Graph> kept;
    for (auto& g : ingest_graph6(in)) {
        if (g.order() != spec.n) continue;
        if (regularity(g) != std::optional<int>(valency)) continue;
        if (spec.connected_only && !is_connected(g)) continue;
        kept.push_back(std::move(g));
    }
    return dedupe_by_canonical(kept);
}

} // namespace

ClassificationCertificate verify_classification(const SweepSpec& spec, int jobs) {
    if (spec.n < 3 || spec.n > 16)
        throw std::invalid_argument("sweep supports 3 <= n <= 16");
    std::vector<int> ks = spec.valencies;
    if (spec.all_valencies) {
        ks.clear();
        for (int k = 2; k < spec.n; ++k) ks.push_back(k);
    }

    ClassificationCertificate cert;
    cert.spec = spec;

    auto family = theorem_family();
    std::map<CanonicalForm, std::string> family_forms;
    for (const auto& e : family) family_forms[canonical_form(e.graph)] = e.name;

    for (int k : ks) {
        SweepCount sc;
        sc.valency = k;
        if ((spec.n * k) % 2 != 0) {
            sc.skipped_parity = true;
            cert.counts.push_back(sc);
            continue;
        }
        auto graphs = sweep_graphs(spec, k, jobs);
        sc.generated = static_cast<long long>(graphs.size());
        cert.counts.push_back(sc);

        for (const auto& g : graphs) {
            auto report = analyze(g);
            if (!report.ndb || !report.gamma || *report.gamma != report.diameter + 1)
                continue;
            SurvivorRecord rec;
            rec.canon = canonical_form(g);
            rec.canon_g6 = emit_graph6(rec.canon.to_graph());
            rec.valency = k;
            rec.report = std::move(report);
            auto it = family_forms.find(rec.canon);
            rec.atlas_match = it == family_forms.end() ? atlas_unmatched : it->second;
            rec.audit = necessary_conditions(g);
            cert.survivors.push_back(std::move(rec));
        }
    }
    std::sort(cert.survivors.begin(), cert.survivors.end(),
              [](const SurvivorRecord& a, const SurvivorRecord& b) {
                  return a.canon < b.canon;
              });
    return cert;
}

namespace {

json optional_int(const std::optional<int>& v) {
    return v ? json(*v) : json(nullptr);
}

json report_json(const NdbReport& r) {
    json edges = json::array();
    for (const auto& e : r.per_edge)
        edges.push_back({{"u", e.u},
                         {"v", e.v},
                         {"closer_u", e.closer_u},
                         {"closer_v", e.closer_v},
                         {"ties", e.ties},
                         {"balanced", e.balanced}});
    return {{"connected", r.connected},
            {"valency", optional_int(r.valency)},
            {"diameter", r.diameter},
            {"db", r.db},
            {"ndb", r.ndb},
            {"gamma", optional_int(r.gamma)},
            {"edge_regular_lambda", optional_int(r.edge_regular_lambda)},
            {"self_median", r.self_median},
            {"edges", edges}};
}

json audit_json(const NecessaryConditions& a) {
    json conds = json::array();
    for (const auto& c : a.conditions)
        conds.push_back({{"name", c.name}, {"passed", c.passed}});
    return {{"applicable", a.applicable}, {"conditions", conds}};
}

} // namespace

void append_certificate_jsonl(std::ostream& out, const ClassificationCertificate& cert) {
    for (const auto& sc : cert.counts) {
        json base = {{"schema_version", certificate_schema_version},
                     {"generator", generator_version},
                     {"order", cert.spec.n},
                     {"valency", sc.valency},
                     {"generated", sc.generated},
                     {"skipped_parity", sc.skipped_parity}};
        bool any = false;
        for (const auto& s : cert.survivors) {
            if (s.valency != sc.valency) continue;
            any = true;
            json line = base;
            line["survivor_canon"] = s.canon_g6;
            line["report"] = report_json(s.report);
            line["atlas_match"] = s.atlas_match;
            line["audit"] = audit_json(s.audit);
            out << line.dump() << '\n';
        }
        if (!any) {
            json line = base;
            line["survivor_canon"] = nullptr;
            line["report"] = nullptr;
            line["atlas_match"] = nullptr;
            line["audit"] = nullptr;
            out << line.dump() << '\n';
        }
    }
}

std::string report_json_string(const NdbReport& report) {
    return report_json(report).dump(2);
}

} // namespace ndb
