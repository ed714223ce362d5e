#include "cyclex/patterns.hpp"

namespace cyclex {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

Graph complete(int n) {
    require(n >= 1, "complete graph needs order >= 1");
    Graph g(n);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::span<const std::pair<int, int>>(edges));
}

Graph path(int n) {
    require(n >= 1, "path needs order >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return Graph(n, std::span<const std::pair<int, int>>(edges));
}

Graph cycle(int n) {
    require(n >= 3, "cycle needs order >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return Graph(n, std::span<const std::pair<int, int>>(edges));
}

Graph empty(int n) {
    require(n >= 1, "empty graph needs order >= 1");
    return Graph(n);
}

}  // namespace

Graph union_of(const Graph& g, const Graph& h) {
    const int n = g.order() + h.order();
    if (n > kMaxOrder) throw std::invalid_argument("union exceeds order capacity");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < g.order(); ++u) rows[static_cast<std::size_t>(u)] = g.neighbors(u).bits();
    for (int u = 0; u < h.order(); ++u)
        rows[static_cast<std::size_t>(g.order() + u)] = h.neighbors(u).bits() << g.order();
    return Graph::from_rows(n, rows);
}

Graph join_of(const Graph& g, const Graph& h) {
    const int n = g.order() + h.order();
    if (n > kMaxOrder) throw std::invalid_argument("join exceeds order capacity");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    const std::uint64_t left = VertexSet::full(g.order()).bits();
    const std::uint64_t right = VertexSet::full(n).bits() & ~left;
    for (int u = 0; u < g.order(); ++u)
        rows[static_cast<std::size_t>(u)] = g.neighbors(u).bits() | right;
    for (int u = 0; u < h.order(); ++u)
        rows[static_cast<std::size_t>(g.order() + u)] = (h.neighbors(u).bits() << g.order()) | left;
    return Graph::from_rows(n, rows);
}

Graph complement_of(const Graph& g) {
    const int n = g.order();
    const std::uint64_t full = VertexSet::full(n).bits();
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        rows[static_cast<std::size_t>(u)] = full & ~g.neighbors(u).bits() & ~(std::uint64_t{1} << u);
    return Graph::from_rows(n, rows);
}

Graph named_graph(PatternId id) {
    switch (id.kind) {
        case PatternKind::Kn: return complete(id.n);
        case PatternKind::Pn: return path(id.n);
        case PatternKind::Cn: return cycle(id.n);
        case PatternKind::Star:
            require(id.n >= 1, "star needs order >= 1");
            return id.n == 1 ? complete(1) : join_of(complete(1), empty(id.n - 1));
        case PatternKind::Claw: return named_graph(PatternId::star(4));
        case PatternKind::Paw: return join_of(complete(1), union_of(complete(1), complete(2)));
        case PatternKind::Gem: return join_of(complete(1), path(4));
        case PatternKind::K113: return join_of(complete(1), join_of(complete(1), empty(3)));
        case PatternKind::K1P3: return join_of(complete(1), path(3));
        case PatternKind::K1K1uP3: return join_of(complete(1), union_of(complete(1), path(3)));
        case PatternKind::K14: return named_graph(PatternId::star(5));
        case PatternKind::K2K1uK2: return join_of(complete(2), union_of(complete(1), complete(2)));
        case PatternKind::Xgraph:
            // Vertices 0..6 = center triangle's apex u0, triangle u1 u2 u3,
            // pendants u1' u2' u3' on indices 4 5 6.
            return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
                             {1, 2}, {2, 3}, {1, 3}, {1, 4}, {2, 5}, {3, 6}});
    }
    throw std::invalid_argument("unknown pattern id");
}

std::string pattern_name(PatternId id) {
    switch (id.kind) {
        case PatternKind::Kn: return "K" + std::to_string(id.n);
        case PatternKind::Pn: return "P" + std::to_string(id.n);
        case PatternKind::Cn: return "C" + std::to_string(id.n);
        case PatternKind::Star: return "K1," + std::to_string(id.n - 1);
        case PatternKind::Claw: return "claw";
        case PatternKind::Paw: return "paw";
        case PatternKind::Gem: return "gem";
        case PatternKind::K113: return "K113";
        case PatternKind::K1P3: return "K1+P3";
        case PatternKind::K1K1uP3: return "K1+(K1uP3)";
        case PatternKind::K14: return "K14";
        case PatternKind::K2K1uK2: return "K2+(K1uK2)";
        case PatternKind::Xgraph: return "X";
    }
    return "?";
}

std::vector<PatternId> catalog_patterns() {
    return {
        PatternId::fixed(PatternKind::Claw),    PatternId::fixed(PatternKind::K1P3),
        PatternId::fixed(PatternKind::Paw),     PatternId::fixed(PatternKind::Gem),
        PatternId::fixed(PatternKind::K113),    PatternId::fixed(PatternKind::K1K1uP3),
        PatternId::fixed(PatternKind::K14),     PatternId::fixed(PatternKind::K2K1uK2),
        PatternId::fixed(PatternKind::Xgraph),
    };
}

}  // namespace cyclex
