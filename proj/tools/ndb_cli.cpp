// Command line front end: analyze single graphs, run exhaustive
// classification sweeps, census queries over generated families, dump
// the named-graph atlas, and property-check the distance-cell lemmas.
//
// Exit codes: 0 success / certificate OK, 1 usage error, 2 verification
// or analysis failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ndb/atlas.hpp"
#include "ndb/balance.hpp"
#include "ndb/canonical.hpp"
#include "ndb/distance.hpp"
#include "ndb/generate.hpp"
#include "ndb/graph6.hpp"
#include "ndb/random.hpp"
#include "ndb/verify.hpp"

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_failure = 2;

ndb::Graph parse_edge_list(std::istream& in) {
    std::vector<ndb::Edge> edges;
    int declared_n = -1, max_v = -1;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first.rfind("n=", 0) == 0) {
            declared_n = std::stoi(first.substr(2));
            continue;
        }
        int u = std::stoi(first), v;
        if (!(ls >> v)) throw std::invalid_argument("edge line needs two vertices");
        edges.emplace_back(u, v);
        max_v = std::max({max_v, u, v});
    }
    int n = declared_n >= 0 ? declared_n : max_v + 1;
    if (n < 1) throw std::invalid_argument("edge list holds no vertices");
    return ndb::Graph::from_edges(n, edges);
}

struct ResolvedInput {
    std::string name;
    ndb::Graph graph;
};

ResolvedInput resolve_input(const std::string& positional, const std::string& graph6) {
    if (!graph6.empty())
        return {"graph6:" + graph6, ndb::parse_graph6(graph6)};
    if (positional.empty())
        throw std::invalid_argument("no input given");
    if (auto g = ndb::atlas_lookup(positional)) return {positional, *g};
    std::ifstream in(positional);
    if (!in)
        throw std::invalid_argument("not an atlas name and not a readable file: " +
                                    positional);
    return {positional, parse_edge_list(in)};
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string opt_str(const std::optional<int>& v) {
    return v ? std::to_string(*v) : "none";
}

void print_cells(std::ostream& out, const ndb::Graph& g) {
    for (auto [u, v] : g.edges()) {
        auto p = ndb::d_cell_partition(g, u, v);
        out << "edge " << u << "-" << v << ": |W(u,v)|=" << p.w_uv_size
            << " |W(v,u)|=" << p.w_vu_size << " ties=" << p.tie_count
            << (p.balanced ? " balanced" : "") << "\n";
        for (const auto& [key, verts] : p.cells) {
            out << "  D(" << key.first << "," << key.second << ") = {";
            for (std::size_t i = 0; i < verts.size(); ++i)
                out << (i ? "," : "") << verts[i];
            out << "}\n";
        }
    }
}

void print_geodesics(std::ostream& out, const ndb::Graph& g) {
    auto report = ndb::analyze(g);
    if (!report.ndb || !report.gamma || *report.gamma != report.diameter + 1) {
        out << "geodesic profiles need a nicely distance-balanced graph with "
               "gamma = d+1\n";
        return;
    }
    for (const auto& path : ndb::diametral_geodesics(g)) {
        auto p = ndb::profile_for_geodesic(g, path);
        out << "geodesic";
        for (int v : p.geodesic) out << " " << v;
        out << "  ell=" << p.ell << " extra=" << p.u_extra << "\n";
    }
}

int cmd_analyze(const std::string& input, const std::string& graph6_arg,
                bool cells, bool geodesics, const std::string& format) {
    ResolvedInput in = resolve_input(input, graph6_arg);
    if (!ndb::is_connected(in.graph)) {
        if (format == "json") {
            json doc = {{"schema_version", ndb::certificate_schema_version},
                        {"input", in.name},
                        {"report", {{"connected", false}}}};
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << "graph: " << in.name << " (n=" << in.graph.order()
                      << ", m=" << in.graph.edge_count() << ")\n"
                      << "connected: no (analysis needs a connected graph)\n";
        }
        return exit_failure;
    }
    auto report = ndb::analyze(in.graph);
    if (format == "json") {
        json doc = {{"schema_version", ndb::certificate_schema_version},
                    {"input", in.name},
                    {"order", in.graph.order()},
                    {"edges", in.graph.edge_count()},
                    {"report", json::parse(ndb::report_json_string(report))}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "graph: " << in.name << " (n=" << in.graph.order()
                  << ", m=" << in.graph.edge_count() << ")\n"
                  << "connected: yes\n"
                  << "valency: " << opt_str(report.valency) << "\n"
                  << "diameter: " << report.diameter << "\n"
                  << "distance-balanced: " << yesno(report.db) << "\n"
                  << "nicely distance-balanced: " << yesno(report.ndb) << "\n"
                  << "gamma: " << opt_str(report.gamma);
        if (report.gamma && *report.gamma == report.diameter + 1)
            std::cout << " (= d+1)";
        std::cout << "\n"
                  << "edge-regular lambda: " << opt_str(report.edge_regular_lambda)
                  << "\n"
                  << "self-median: " << yesno(report.self_median) << "\n";
        if (cells) print_cells(std::cout, in.graph);
        if (geodesics) print_geodesics(std::cout, in.graph);
    }
    return exit_ok;
}

int cmd_verify(int order, bool all_valencies, std::vector<int> valencies,
               const std::string& from_graph6, int jobs, const std::string& out_path,
               const std::string& format) {
    ndb::SweepSpec spec;
    spec.n = order;
    spec.all_valencies = all_valencies || valencies.empty();
    spec.valencies = std::move(valencies);
    if (!from_graph6.empty()) {
        spec.source = ndb::SweepSource::graph6;
        spec.graph6_path = from_graph6;
    }
    auto cert = ndb::verify_classification(spec, jobs);

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::app);
        if (!out) throw std::runtime_error("cannot open " + out_path);
        ndb::append_certificate_jsonl(out, cert);
    }
    if (format == "json") {
        std::ostringstream ss;
        ndb::append_certificate_jsonl(ss, cert);
        std::cout << ss.str();
    } else {
        std::cout << "order " << cert.spec.n << " sweep\n";
        for (const auto& c : cert.counts) {
            std::cout << "  k=" << c.valency << ": ";
            if (c.skipped_parity)
                std::cout << "skipped (odd n*k)\n";
            else
                std::cout << c.generated << " connected regular graphs\n";
        }
        std::cout << "survivors (NDB with gamma=d+1): " << cert.survivors.size()
                  << "\n";
        for (const auto& s : cert.survivors) {
            std::cout << "  k=" << s.valency << " d=" << s.report.diameter
                      << " gamma=" << opt_str(s.report.gamma) << " atlas="
                      << s.atlas_match << " audit="
                      << (s.audit.applicable && s.audit.all_passed() ? "pass"
                                                                     : "FAIL")
                      << " g6=" << s.canon_g6 << "\n";
        }
        std::cout << "status: " << (cert.ok() ? "OK" : "FAILED") << "\n";
    }
    return cert.ok() ? exit_ok : exit_failure;
}

int cmd_census(int order, int valency, const std::vector<std::string>& predicate_args,
               int jobs, const std::string& format) {
    std::vector<ndb::Predicate> preds;
    for (const auto& a : predicate_args) preds.push_back(ndb::parse_predicate(a));
    auto graphs = ndb::generate_regular(order, valency, {.jobs = jobs});
    auto result = ndb::filter_census(graphs, preds);
    if (format == "json") {
        json stages = json::array();
        for (const auto& [name, count] : result.stage_counts)
            stages.push_back({{"predicate", name}, {"count", count}});
        json survivors = json::array();
        for (const auto& g : result.survivors)
            survivors.push_back(ndb::emit_graph6(g));
        json doc = {{"schema_version", ndb::certificate_schema_version},
                    {"order", order},
                    {"valency", valency},
                    {"generated", result.input_count},
                    {"stages", stages},
                    {"survivors", survivors}};
        std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "stage,count\n";
        std::cout << "generated," << result.input_count << "\n";
        for (const auto& [name, count] : result.stage_counts)
            std::cout << name << "," << count << "\n";
    } else {
        std::cout << "generated: " << result.input_count << "\n";
        for (const auto& [name, count] : result.stage_counts)
            std::cout << "after " << name << ": " << count << "\n";
        for (const auto& g : result.survivors)
            std::cout << "  " << ndb::emit_graph6(g) << "\n";
    }
    return exit_ok;
}

int cmd_atlas_list() {
    for (const auto& e : ndb::theorem_family()) {
        std::cout << e.name << " (n=" << e.graph.order() << ", k=" << e.valency
                  << ", d=" << e.diameter << ", gamma=" << e.gamma << ")\n";
    }
    std::cout << "families: cycle-N (N>=3), complete-N (N>=1), prism-N (N>=3), "
                 "mobius-N (even N>=6), kTx3 (T>=2), q1 q2 q4\n";
    return exit_ok;
}

int cmd_atlas_dump(const std::string& name, const std::string& format) {
    auto g = ndb::atlas_lookup(name);
    if (!g) throw std::invalid_argument("unknown atlas name: " + name);
    if (format == "edgelist") {
        std::cout << "n=" << g->order() << "\n";
        for (auto [u, v] : g->edges()) std::cout << u << " " << v << "\n";
    } else {
        std::cout << ndb::emit_graph6(*g) << "\n";
    }
    return exit_ok;
}

int cmd_check_lemmas(int samples, int max_order, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> order_dist(4, max_order);
    long long edges_checked = 0;
    for (int s = 0; s < samples; ++s) {
        ndb::Graph g = ndb::random_connected_graph(rng, order_dist(rng));
        for (auto [u, v] : g.edges()) {
            ++edges_checked;
            if (!ndb::check_cell_adjacency(g, u, v)) {
                std::cout << "cell-adjacency violation: " << ndb::emit_graph6(g)
                          << " edge " << u << "-" << v << "\n";
                return exit_failure;
            }
            auto p = ndb::d_cell_partition(g, u, v);
            if (p.w_uv_size + p.w_vu_size + p.tie_count != g.order()) {
                std::cout << "partition identity violation: " << ndb::emit_graph6(g)
                          << "\n";
                return exit_failure;
            }
        }
    }
    long long regular_edges = 0;
    for (int s = 0; s < samples; ++s) {
        int n = order_dist(rng);
        std::uniform_int_distribution<int> k_dist(2, std::min(5, n - 1));
        int k = k_dist(rng);
        if ((n * k) % 2 != 0) ++n;
        if (n > max_order) n -= 2;
        if (n <= k) continue;
        ndb::Graph g = ndb::random_connected_regular(rng, n, k);
        for (auto [u, v] : g.edges()) {
            ++regular_edges;
            auto p = ndb::d_cell_partition(g, u, v);
            auto sz = [&](int i, int j) {
                auto it = p.cells.find({i, j});
                return it == p.cells.end() ? 0 : static_cast<int>(it->second.size());
            };
            if (sz(1, 2) != sz(2, 1)) {
                std::cout << "regular half-neighborhood violation: "
                          << ndb::emit_graph6(g) << "\n";
                return exit_failure;
            }
        }
    }
    std::cout << "cell-adjacency and partition identity: " << edges_checked
              << " edges across " << samples << " random connected graphs\n"
              << "equal (1,2)/(2,1) cells: " << regular_edges
              << " edges across random connected regular graphs\n"
              << "all checks passed\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance-balance analysis and classification sweeps"};
    app.require_subcommand(1);

    // analyze
    std::string an_input, an_graph6, an_format = "text";
    bool an_cells = false, an_geodesics = false;
    auto* analyze = app.add_subcommand("analyze", "report on a single graph");
    analyze->add_option("input", an_input, "atlas name or edge-list file");
    analyze->add_option("--graph6", an_graph6, "graph6 line as input");
    analyze->add_flag("--cells", an_cells, "print per-edge distance cells");
    analyze->add_flag("--geodesics", an_geodesics, "print geodesic profiles");
    analyze->add_option("--format", an_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // verify
    int ve_order = 0, ve_jobs = 1;
    bool ve_all = false;
    std::vector<int> ve_valencies;
    std::string ve_from, ve_out, ve_format = "text";
    auto* verify = app.add_subcommand("verify", "exhaustive classification sweep");
    verify->add_option("--order", ve_order, "graph order")->required();
    verify->add_flag("--all-valencies", ve_all, "sweep every valency 2..n-1");
    verify->add_option("--valency", ve_valencies, "valencies to sweep");
    verify->add_option("--from-graph6", ve_from, "ingest graphs from a graph6 file");
    verify->add_option("--jobs", ve_jobs, "worker threads");
    verify->add_option("--out", ve_out, "append certificate JSON lines here");
    verify->add_option("--format", ve_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // census
    int ce_order = 0, ce_valency = 0, ce_jobs = 1;
    std::string ce_format = "text";
    int ce_diameter = -1, ce_girth = -1, ce_ecc = -1, ce_lambda = -1;
    bool ce_db = false, ce_ndb = false, ce_gamma = false;
    auto* census = app.add_subcommand("census", "count generated graphs by predicate");
    census->add_option("--order", ce_order, "graph order")->required();
    census->add_option("--valency", ce_valency, "valency")->required();
    census->add_option("--diameter", ce_diameter, "require diameter = D");
    census->add_option("--min-girth", ce_girth, "require girth >= G");
    census->add_option("--all-ecc", ce_ecc, "require every eccentricity = E");
    census->add_option("--edge-regular-lambda", ce_lambda,
                       "require edge-regularity with this lambda");
    census->add_flag("--db", ce_db, "require distance-balanced");
    census->add_flag("--ndb", ce_ndb, "require nicely distance-balanced");
    census->add_flag("--gamma-d-plus-1", ce_gamma, "require gamma = d+1");
    census->add_option("--jobs", ce_jobs, "worker threads");
    census->add_option("--format", ce_format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // atlas
    auto* atlas = app.add_subcommand("atlas", "named graph constructions");
    auto* atlas_list = atlas->add_subcommand("list", "list atlas entries");
    std::string ad_name, ad_format = "graph6";
    auto* atlas_dump = atlas->add_subcommand("dump", "serialize one entry");
    atlas_dump->add_option("name", ad_name, "atlas name")->required();
    atlas_dump->add_option("--format", ad_format, "graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    atlas->require_subcommand(1);

    // check-lemmas
    int cl_samples = 100, cl_max_order = 10;
    unsigned cl_seed = 20240901;
    auto* check = app.add_subcommand("check-lemmas",
                                     "property-check the distance-cell lemmas");
    check->add_option("--samples", cl_samples, "random graphs per suite");
    check->add_option("--max-order", cl_max_order, "largest sampled order");
    check->add_option("--seed", cl_seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (analyze->parsed())
            return cmd_analyze(an_input, an_graph6, an_cells, an_geodesics, an_format);
        if (verify->parsed())
            return cmd_verify(ve_order, ve_all, ve_valencies, ve_from, ve_jobs,
                              ve_out, ve_format);
        if (census->parsed()) {
            std::vector<std::string> preds;
            if (ce_diameter >= 0) preds.push_back("diameter=" + std::to_string(ce_diameter));
            if (ce_girth >= 0) preds.push_back("min-girth=" + std::to_string(ce_girth));
            if (ce_ecc >= 0) preds.push_back("all-ecc=" + std::to_string(ce_ecc));
            if (ce_lambda >= 0)
                preds.push_back("edge-regular-lambda=" + std::to_string(ce_lambda));
            if (ce_db) preds.push_back("db");
            if (ce_ndb) preds.push_back("ndb");
            if (ce_gamma) preds.push_back("gamma-d-plus-1");
            return cmd_census(ce_order, ce_valency, preds, ce_jobs, ce_format);
        }
        if (atlas->parsed()) {
            if (atlas_list->parsed()) return cmd_atlas_list();
            if (atlas_dump->parsed()) return cmd_atlas_dump(ad_name, ad_format);
        }
        if (check->parsed()) return cmd_check_lemmas(cl_samples, cl_max_order, cl_seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}
