#include "ndb/generate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <istream>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "ndb/balance.hpp"
#include "ndb/canonical.hpp"
#include "ndb/distance.hpp"
#include "ndb/graph6.hpp"

namespace ndb {

namespace {

// Snapshot of a search node, used to hand subtrees to worker threads.
struct SearchTask {
    std::array<std::uint64_t, 16> rows{};
    std::array<int, 16> deg{};
};

// Row-by-row backtracking over the upper triangle. A completed matrix is
// kept only if no tested relabeling makes its bitstring lexicographically
// larger: after each finished row the tail columns must be sorted
// descending, and no transposition of two placed vertices (with tails
// re-sorted) may beat the current prefix. The lex-max representative of
// every class survives all tests, so together with the final canonical
// dedupe the output covers each class exactly once.
struct RegularSearch {
    int n = 0;
    int k = 0;
    bool connected_only = true;
    int cut_depth = -1; ///< when >= 0, emit tasks at this row instead of recursing
    std::vector<SearchTask>* task_sink = nullptr;
    std::array<std::uint64_t, 16> rows{};
    std::array<int, 16> deg{};
    std::vector<Graph> leaves;

    bool adj(int a, int b) const { return (rows[static_cast<std::size_t>(a)] >> b) & 1u; }

    // Column key of tail column j after completing row r, with placed
    // rows viewed through the transposition (a b); bit for row i sits at
    // position r-i so row 0 is the MSB.
    std::uint32_t tail_key(int j, int r, int a, int b) const {
        std::uint32_t key = 0;
        for (int i = 0; i <= r; ++i) {
            int src = i == a ? b : (i == b ? a : i);
            key = (key << 1) | (adj(src, j) ? 1u : 0u);
        }
        return key;
    }

    // True if relabeling by the transposition (a b) of placed vertices,
    // with the tail columns re-sorted, yields a strictly larger prefix.
    bool swap_beats(int r, int a, int b,
                    std::span<const std::uint32_t> keys_sorted) const {
        std::array<std::uint32_t, 16> cand{};
        const int tails = n - 1 - r;
        for (int t = 0; t < tails; ++t)
            cand[static_cast<std::size_t>(t)] = tail_key(r + 1 + t, r, a, b);
        std::sort(cand.begin(), cand.begin() + tails, std::greater<>());
        for (int i = 0; i <= r; ++i) {
            std::uint32_t cur = 0, alt = 0;
            int src = i == a ? b : (i == b ? a : i);
            for (int j = i + 1; j <= r; ++j) {
                int sj = j == a ? b : (j == b ? a : j);
                cur = (cur << 1) | (adj(i, j) ? 1u : 0u);
                alt = (alt << 1) | (adj(src, sj) ? 1u : 0u);
            }
            for (int t = 0; t < tails; ++t) {
                cur = (cur << 1) |
                      ((keys_sorted[static_cast<std::size_t>(t)] >> (r - i)) & 1u);
                alt = (alt << 1) |
                      ((cand[static_cast<std::size_t>(t)] >> (r - i)) & 1u);
            }
            if (alt != cur) return alt > cur;
        }
        return false;
    }

    bool prefix_canonical(int r) const {
        const int tails = n - 1 - r;
        std::array<std::uint32_t, 16> keys{};
        for (int t = 0; t < tails; ++t)
            keys[static_cast<std::size_t>(t)] = tail_key(r + 1 + t, r, -1, -1);
        for (int t = 0; t + 1 < tails; ++t)
            if (keys[static_cast<std::size_t>(t)] < keys[static_cast<std::size_t>(t + 1)])
                return false;
        std::span<const std::uint32_t> sorted(keys.data(), static_cast<std::size_t>(tails));
        for (int a = 0; a < r; ++a)
            for (int b = a + 1; b <= r; ++b)
                if (swap_beats(r, a, b, sorted)) return false;
        return true;
    }

    bool feasible_after_row(int r) const {
        int total = 0;
        for (int j = r + 1; j < n; ++j) {
            int need = k - deg[static_cast<std::size_t>(j)];
            if (need < 0 || need > n - r - 2) return false;
            total += need;
        }
        return total % 2 == 0;
    }

    void emit_leaf() {
        Graph g = Graph::from_rows(
            n, std::span<const std::uint64_t>(rows.data(), static_cast<std::size_t>(n)));
        if (connected_only && !is_connected(g)) return;
        leaves.push_back(std::move(g));
    }

    void fill_row(int r) {
        if (r == cut_depth && task_sink) {
            task_sink->push_back({rows, deg});
            return;
        }
        if (r == n - 1) {
            if (deg[static_cast<std::size_t>(r)] == k) emit_leaf();
            return;
        }
        int need = k - deg[static_cast<std::size_t>(r)];
        if (need < 0) return;
        std::array<int, 16> avail{};
        int na = 0;
        for (int j = r + 1; j < n; ++j)
            if (deg[static_cast<std::size_t>(j)] < k) avail[static_cast<std::size_t>(na++)] = j;
        if (need > na) return;
        choose(r, need, 0, avail, na);
    }

    void choose(int r, int need, int from, const std::array<int, 16>& avail, int na) {
        if (need == 0) {
            if (feasible_after_row(r) && prefix_canonical(r)) fill_row(r + 1);
            return;
        }
        for (int t = from; t <= na - need; ++t) {
            int j = avail[static_cast<std::size_t>(t)];
            rows[static_cast<std::size_t>(r)] |= std::uint64_t{1} << j;
            rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << r;
            deg[static_cast<std::size_t>(r)]++;
            deg[static_cast<std::size_t>(j)]++;
            choose(r, need - 1, t + 1, avail, na);
            rows[static_cast<std::size_t>(r)] &= ~(std::uint64_t{1} << j);
            rows[static_cast<std::size_t>(j)] &= ~(std::uint64_t{1} << r);
            deg[static_cast<std::size_t>(r)]--;
            deg[static_cast<std::size_t>(j)]--;
        }
    }
};

std::vector<Graph> run_search(int n, int k, bool connected_only, int jobs) {
    if (k == 0) {
        if (connected_only && n > 1) return {};
        std::vector<std::uint64_t> empty(static_cast<std::size_t>(n), 0);
        return {Graph::from_rows(n, empty)};
    }

    const int cut = std::min(2, n - 1);
    std::vector<SearchTask> tasks;
    {
        RegularSearch collector;
        collector.n = n;
        collector.k = k;
        collector.connected_only = connected_only;
        collector.cut_depth = cut;
        collector.task_sink = &tasks;
        collector.fill_row(0);
    }

    std::set<CanonicalForm> forms;
    std::mutex forms_mutex;
    std::atomic<std::size_t> next_task{0};
    const int workers = std::max(1, jobs);

    auto worker = [&]() {
        RegularSearch s;
        s.n = n;
        s.k = k;
        s.connected_only = connected_only;
        std::set<CanonicalForm> local;
        for (;;) {
            std::size_t idx = next_task.fetch_add(1);
            if (idx >= tasks.size()) break;
            s.rows = tasks[idx].rows;
            s.deg = tasks[idx].deg;
            s.leaves.clear();
            s.fill_row(cut);
            for (const Graph& g : s.leaves) local.insert(canonical_form(g));
        }
        std::lock_guard<std::mutex> lock(forms_mutex);
        forms.merge(local);
    };

    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<Graph> out;
    out.reserve(forms.size());
    for (const auto& f : forms) out.push_back(f.to_graph());
    return out;
}

} // namespace

std::vector<Graph> generate_regular(int n, int k, GenerateOptions opts) {
    if (n < 3 || n > 16)
        throw std::invalid_argument("generation supports 3 <= n <= 16");
    if (k < 0 || k >= n)
        throw std::invalid_argument("valency must satisfy 0 <= k < n");
    if ((n * k) % 2 != 0)
        throw std::invalid_argument("n*k must be even");

    if (2 * k > n - 1) {
        // complement route: enumerate the sparse side without the
        // connectivity filter, complement, then re-filter
        auto sparse = run_search(n, n - 1 - k, false, opts.jobs);
        std::vector<Graph> dense;
        for (const auto& g : sparse) {
            Graph c = g.complement();
            if (!opts.connected_only || is_connected(c)) dense.push_back(std::move(c));
        }
        return dedupe_by_canonical(dense);
    }
    return run_search(n, k, opts.connected_only, opts.jobs);
}

std::vector<Graph> dedupe_by_canonical(std::span<const Graph> graphs) {
    std::set<CanonicalForm> forms;
    for (const auto& g : graphs) forms.insert(canonical_form(g));
    std::vector<Graph> out;
    out.reserve(forms.size());
    for (const auto& f : forms) out.push_back(f.to_graph());
    return out;
}

Predicate parse_predicate(std::string_view text) {
    auto eq = text.find('=');
    std::string name(text.substr(0, eq));
    if (name == "db" || name == "ndb" || name == "gamma-d-plus-1") {
        if (eq != std::string_view::npos)
            throw std::invalid_argument("predicate takes no value: " + name);
        return {name, 0};
    }
    if (name == "diameter" || name == "min-girth" || name == "all-ecc" ||
        name == "edge-regular-lambda") {
        if (eq == std::string_view::npos)
            throw std::invalid_argument("predicate needs a value: " + name);
        int value = std::stoi(std::string(text.substr(eq + 1)));
        return {name, value};
    }
    throw std::invalid_argument("unknown predicate: " + name);
}

namespace {

bool predicate_holds(const Graph& g, const Predicate& p) {
    if (p.name == "diameter") return DistanceMatrix(g).diameter() == p.value;
    if (p.name == "min-girth") {
        auto gi = girth(g);
        return !gi || *gi >= p.value; // acyclic graphs pass any bound
    }
    if (p.name == "all-ecc") {
        DistanceMatrix dm(g);
        for (int v = 0; v < g.order(); ++v)
            if (dm.eccentricity(v) != p.value) return false;
        return true;
    }
    if (p.name == "edge-regular-lambda")
        return regularity(g) && edge_regular_lambda(g) == std::optional<int>(p.value);
    if (p.name == "db") return analyze(g).db;
    if (p.name == "ndb") return analyze(g).ndb;
    if (p.name == "gamma-d-plus-1") {
        auto r = analyze(g);
        return r.ndb && r.gamma && *r.gamma == r.diameter + 1;
    }
    throw std::invalid_argument("unknown predicate: " + p.name);
}

} // namespace

CensusResult filter_census(std::span<const Graph> stream,
                           std::span<const Predicate> predicates) {
    CensusResult out;
    out.input_count = static_cast<long long>(stream.size());
    std::vector<Graph> current(stream.begin(), stream.end());
    for (const auto& p : predicates) {
        std::vector<Graph> kept;
        for (auto& g : current)
            if (predicate_holds(g, p)) kept.push_back(std::move(g));
        current = std::move(kept);
        std::string label = p.name;
        if (p.name != "db" && p.name != "ndb" && p.name != "gamma-d-plus-1")
            label += "=" + std::to_string(p.value);
        out.stage_counts.emplace_back(label, static_cast<long long>(current.size()));
    }
    out.survivors = dedupe_by_canonical(current);
    return out;
}

std::vector<Graph> ingest_graph6(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

} // namespace ndb
