#include "cyclex/graph.hpp"

#include <algorithm>

namespace cyclex {

Graph Graph::from_rows(int n, std::span<const std::uint64_t> rows) {
    Graph g(n);
    if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("row count does not match order");
    const std::uint64_t valid = VertexSet::full(n).bits();
    for (int u = 0; u < n; ++u) {
        if (rows[static_cast<std::size_t>(u)] & ~valid)
            throw std::invalid_argument("neighbor index out of range");
        if ((rows[static_cast<std::size_t>(u)] >> u) & 1u)
            throw std::invalid_argument("loops are not allowed");
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (((rows[static_cast<std::size_t>(u)] >> v) & 1u) != ((rows[static_cast<std::size_t>(v)] >> u) & 1u))
                throw std::invalid_argument("adjacency rows are not symmetric");
    std::copy(rows.begin(), rows.end(), g.rows_.begin());
    return g;
}

void Graph::add_edge_checked(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    rows_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    rows_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

int Graph::size() const {
    int twice = 0;
    for (int u = 0; u < n_; ++u) twice += degree(u);
    return twice / 2;
}

bool Graph::operator==(const Graph& o) const {
    if (n_ != o.n_) return false;
    return std::equal(rows_.begin(), rows_.begin() + n_, o.rows_.begin());
}

namespace {

// BFS layers from u as bitmasks; stops when the frontier empties.
std::vector<std::uint64_t> bfs_layers(const Graph& g, int u) {
    std::vector<std::uint64_t> layers;
    std::uint64_t seen = std::uint64_t{1} << u;
    std::uint64_t frontier = seen;
    layers.push_back(frontier);
    while (frontier) {
        std::uint64_t next = 0;
        for (int v : VertexSet(frontier)) next |= g.neighbors(v).bits();
        next &= ~seen;
        if (!next) break;
        seen |= next;
        layers.push_back(next);
        frontier = next;
    }
    return layers;
}

}  // namespace

VertexSet distance_sets(const Graph& g, int u, int k) {
    g.check_vertex(u);
    if (k < 0) throw std::invalid_argument("distance must be nonnegative");
    auto layers = bfs_layers(g, u);
    if (k >= static_cast<int>(layers.size())) return VertexSet();
    return VertexSet(layers[static_cast<std::size_t>(k)]);
}

std::vector<int> induced_mapping(VertexSet s) { return s.to_vector(); }

Graph induce(const Graph& g, VertexSet s) {
    if (s.empty()) throw std::invalid_argument("cannot induce on the empty set");
    if (!s.is_subset_of(g.vertices())) throw std::out_of_range("set contains non-vertices");
    const auto map = induced_mapping(s);
    const int m = static_cast<int>(map.size());
    Graph result(m);
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (g.has_edge(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)])) {
                rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
            }
    return Graph::from_rows(m, rows);
}

bool is_connected(const Graph& g) {
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (int v : VertexSet(frontier)) next |= g.neighbors(v).bits();
        next &= ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == g.vertices().bits();
}

std::optional<int> diameter(const Graph& g) {
    int best = 0;
    for (int u = 0; u < g.order(); ++u) {
        auto layers = bfs_layers(g, u);
        std::uint64_t seen = 0;
        for (const auto& l : layers) seen |= l;
        if (seen != g.vertices().bits()) return std::nullopt;
        best = std::max(best, static_cast<int>(layers.size()) - 1);
    }
    return best;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.sequence.reserve(static_cast<std::size_t>(g.order()));
    for (int u = 0; u < g.order(); ++u) p.sequence.push_back(g.degree(u));
    std::sort(p.sequence.begin(), p.sequence.end(), std::greater<>());
    p.min_degree = p.sequence.back();
    p.max_degree = p.sequence.front();
    return p;
}

}  // namespace cyclex
