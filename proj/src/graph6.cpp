#include "ndb/graph6.hpp"

#include <stdexcept>

namespace ndb {

Graph parse_graph6(std::string_view line) {
    // tolerate one trailing newline
    if (!line.empty() && line.back() == '\n') line.remove_suffix(1);
    if (line.empty()) throw std::invalid_argument("graph6: empty input");

    unsigned char header = static_cast<unsigned char>(line[0]);
    if (header < 63 + 1 || header > 63 + 62)
        throw std::invalid_argument("graph6: bad header byte (order 1..62 supported)");
    const int n = header - 63;
    const int nbits = n * (n - 1) / 2;
    const int ngroups = (nbits + 5) / 6;
    if (static_cast<int>(line.size()) != 1 + ngroups)
        throw std::invalid_argument(
            static_cast<int>(line.size()) < 1 + ngroups
                ? "graph6: truncated bit payload"
                : "graph6: trailing garbage");

    std::vector<Edge> edges;
    int bit = 0, i = 0, j = 1; // column-major cursor over the upper triangle
    for (int grp = 0; grp < ngroups; ++grp) {
        unsigned char c = static_cast<unsigned char>(line[static_cast<std::size_t>(1 + grp)]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: payload byte out of range");
        int val = c - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            bool set = (val >> b) & 1;
            if (bit >= nbits) {
                if (set) throw std::invalid_argument("graph6: nonzero padding bits");
                continue;
            }
            if (set) edges.emplace_back(i, j);
            if (++i == j) { i = 0; ++j; }
        }
    }
    return Graph::from_edges(n, edges);
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62)
        throw std::invalid_argument("graph6: order > 62 not supported");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int val = 0, nb = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            val = (val << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(63 + val));
                val = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) out.push_back(static_cast<char>(63 + (val << (6 - nb))));
    return out;
}

} // namespace ndb
