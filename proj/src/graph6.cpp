#include "cyclex/graph6.hpp"

#include <fstream>

namespace cyclex {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

bool printable(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view line) {
    if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (line.empty()) throw Graph6Error("empty graph6 record");
    for (char c : line)
        if (!printable(c)) throw Graph6Error("non-printable byte in graph6 record");

    std::size_t pos = 0;
    int n;
    if (line[0] == 126) {  // long-form order prefix '~'
        if (line.size() >= 2 && line[1] == 126)
            throw Graph6Error("order exceeds supported capacity");
        if (line.size() < 4) throw Graph6Error("truncated graph6 order");
        long big = 0;
        for (int i = 1; i <= 3; ++i) big = (big << 6) | (line[static_cast<std::size_t>(i)] - 63);
        if (big > kMaxOrder) throw Graph6Error("order exceeds supported capacity");
        if (big < 63) throw Graph6Error("long-form order below 63");
        n = static_cast<int>(big);
        pos = 4;
    } else {
        n = line[0] - 63;
        if (n < 1 || n > 62) throw Graph6Error("graph6 order byte out of range");
        pos = 1;
    }

    const int nbits = n * (n - 1) / 2;
    const std::size_t nchars = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() - pos < nchars) throw Graph6Error("truncated graph6 adjacency data");
    if (line.size() - pos > nchars) throw Graph6Error("trailing garbage after graph6 record");

    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    int bit = 0;
    // Upper triangle in column order: (0,1),(0,2),(1,2),(0,3),...
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            const int c = line[pos + static_cast<std::size_t>(bit / 6)] - 63;
            if ((c >> (5 - bit % 6)) & 1) {
                rows[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
                rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
            }
        }
    }
    // Padding bits must be zero for a canonical record.
    for (int b = nbits; b < static_cast<int>(nchars) * 6; ++b) {
        const int c = line[pos + static_cast<std::size_t>(b / 6)] - 63;
        if ((c >> (5 - b % 6)) & 1) throw Graph6Error("nonzero padding bits");
    }
    return Graph::from_rows(n, rows);
}

std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Graph6Error("cannot open graph6 file: " + path);
    std::vector<Graph> out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::string_view sv = line;
        if (sv.ends_with('\r')) sv.remove_suffix(1);
        if (first && sv.starts_with(kHeader)) {
            sv.remove_prefix(kHeader.size());
            first = false;
            if (sv.empty()) continue;
        }
        first = false;
        if (sv.empty()) continue;
        out.push_back(parse_graph6(sv));
    }
    return out;
}

}  // namespace cyclex
