#include "ndb/atlas.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace ndb {

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, es);
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

Graph complete_multipartite(std::span<const int> parts) {
    if (parts.empty()) throw std::invalid_argument("need at least one part");
    int n = 0;
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] < 1) throw std::invalid_argument("part sizes must be >= 1");
        for (int i = 0; i < parts[p]; ++i) part_of.push_back(static_cast<int>(p));
        n += parts[p];
    }
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[static_cast<std::size_t>(i)] != part_of[static_cast<std::size_t>(j)])
                es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

Graph complete_multipartite(std::initializer_list<int> parts) {
    return complete_multipartite(std::span<const int>(parts.begin(), parts.size()));
}

Graph hypercube(int m) {
    if (m < 1 || m > 4) throw std::invalid_argument("hypercube supports 1 <= m <= 4");
    int n = 1 << m;
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < m; ++b)
            if (int w = v ^ (1 << b); v < w) es.emplace_back(v, w);
    return Graph::from_edges(n, es);
}

Graph mobius_ladder(int n) {
    if (n < 6 || n % 2 != 0)
        throw std::invalid_argument("moebius ladder needs even n >= 6");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    for (int i = 0; i < n / 2; ++i) es.emplace_back(i, i + n / 2);
    return Graph::from_edges(n, es);
}

Graph prism(int n) {
    if (n < 3) throw std::invalid_argument("prism needs n >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) {
        es.emplace_back(i, (i + 1) % n);
        es.emplace_back(n + i, n + (i + 1) % n);
        es.emplace_back(i, n + i);
    }
    return Graph::from_edges(2 * n, es);
}

Graph paley9() {
    // field elements a+bx with x^2 = -1; the four nonzero squares are
    // +-1 and +-x, so adjacency joins elements differing in one coordinate
    auto idx = [](int a, int b) { return 3 * a + b; };
    auto sq = [&](int a, int b) { // (a+bx)^2
        return std::pair<int, int>(((a * a - b * b) % 3 + 3) % 3, (2 * a * b) % 3);
    };
    std::vector<std::pair<int, int>> squares;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == 0 && b == 0) continue;
            auto s = sq(a, b);
            if (std::find(squares.begin(), squares.end(), s) == squares.end())
                squares.push_back(s);
        }
    std::vector<Edge> es;
    for (int a1 = 0; a1 < 3; ++a1)
        for (int b1 = 0; b1 < 3; ++b1)
            for (int a2 = 0; a2 < 3; ++a2)
                for (int b2 = 0; b2 < 3; ++b2) {
                    int u = idx(a1, b1), v = idx(a2, b2);
                    if (u >= v) continue;
                    std::pair<int, int> diff(((a1 - a2) % 3 + 3) % 3,
                                             ((b1 - b2) % 3 + 3) % 3);
                    if (std::find(squares.begin(), squares.end(), diff) != squares.end())
                        es.emplace_back(u, v);
                }
    return Graph::from_edges(9, es);
}

Graph petersen() {
    // 2-subsets of {0..4} in lexicographic order, adjacent iff disjoint
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
    std::vector<Edge> es;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d)
                es.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return Graph::from_edges(10, es);
}

Graph icosahedron() {
    // apex 0, upper pentagon 1..5, lower pentagon 6..10, apex 11
    std::vector<Edge> es;
    for (int i = 1; i <= 5; ++i) es.emplace_back(0, i);
    for (int i = 6; i <= 10; ++i) es.emplace_back(11, i);
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(1 + i, 1 + (i + 1) % 5);
        es.emplace_back(6 + i, 6 + (i + 1) % 5);
        es.emplace_back(1 + i, 6 + i);
        es.emplace_back(1 + i, 6 + (i + 1) % 5);
    }
    return Graph::from_edges(12, es);
}

Graph line_graph(const Graph& g) {
    auto es = g.edges();
    if (es.empty()) throw std::invalid_argument("line graph needs >= 1 edge");
    std::vector<Edge> out;
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d)
                out.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return Graph::from_edges(static_cast<int>(es.size()), out);
}

std::vector<AtlasEntry> theorem_family(int t_min, int t_max) {
    if (t_min < 2 || t_max < t_min)
        throw std::invalid_argument("tripartite family needs 2 <= t_min <= t_max");
    std::vector<AtlasEntry> out;
    out.push_back({"petersen", petersen(), 3, 2, 3});
    out.push_back({"petersen-complement", petersen().complement(), 6, 2, 3});
    for (int t = t_min; t <= t_max; ++t) {
        std::vector<int> parts(static_cast<std::size_t>(t), 3);
        out.push_back({"k" + std::to_string(t) + "x3", complete_multipartite(parts),
                       3 * (t - 1), 2, 3});
    }
    out.push_back({"mobius8", mobius_ladder(8), 3, 2, 3});
    out.push_back({"paley9", paley9(), 4, 2, 3});
    out.push_back({"q3", hypercube(3), 3, 3, 4});
    out.push_back({"lq3", line_graph(hypercube(3)), 4, 3, 4});
    out.push_back({"icosahedron", icosahedron(), 5, 3, 4});
    return out;
}

namespace {

std::optional<int> parse_int(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

} // namespace

std::optional<Graph> atlas_lookup(const std::string& name) {
    for (const auto& e : theorem_family())
        if (e.name == name) return e.graph;
    if (name == "q1") return hypercube(1);
    if (name == "q2") return hypercube(2);
    if (name == "q4") return hypercube(4);

    auto family = [&](std::string_view prefix) -> std::optional<int> {
        if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
            return std::nullopt;
        return parse_int(std::string_view(name).substr(prefix.size()));
    };
    if (auto n = family("cycle-")) return cycle(*n);
    if (auto n = family("complete-")) return complete(*n);
    if (auto n = family("prism-")) return prism(*n);
    if (auto n = family("mobius-")) return mobius_ladder(*n);
    if (name.size() >= 4 && name[0] == 'k' && name.substr(name.size() - 2) == "x3") {
        if (auto t = parse_int(std::string_view(name).substr(1, name.size() - 3));
            t && *t >= 2)
            return complete_multipartite(std::vector<int>(static_cast<std::size_t>(*t), 3));
    }
    return std::nullopt;
}

std::vector<std::string> atlas_names() {
    std::vector<std::string> out;
    for (const auto& e : theorem_family()) out.push_back(e.name);
    out.insert(out.end(), {"q1", "q2", "q4", "cycle-N", "complete-N", "prism-N",
                           "mobius-N"});
    return out;
}

} // namespace ndb
