#include "cyclex/cycles.hpp"

#include <algorithm>
#include <limits>

namespace cyclex {

OrderedCycle OrderedCycle::over(const Graph& g, std::vector<int> verts) {
    const int m = static_cast<int>(verts.size());
    if (m < 3) throw std::invalid_argument("a cycle has at least 3 vertices");
    VertexSet seen;
    for (int v : verts) {
        g.check_vertex(v);
        if (seen.contains(v)) throw std::invalid_argument("cycle vertices must be distinct");
        seen.add(v);
    }
    for (int i = 0; i < m; ++i)
        if (!g.has_edge(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>((i + 1) % m)]))
            throw std::invalid_argument("consecutive cycle vertices must be adjacent");
    return OrderedCycle(std::move(verts));
}

VertexSet OrderedCycle::vertex_set() const {
    VertexSet s;
    for (int v : verts_) s.add(v);
    return s;
}

bool OrderedCycle::contains(int v) const { return vertex_set().contains(v); }

int OrderedCycle::successor(int v) const {
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (verts_[i] == v) return verts_[(i + 1) % verts_.size()];
    throw std::invalid_argument("vertex not on cycle");
}

int OrderedCycle::predecessor(int v) const {
    for (std::size_t i = 0; i < verts_.size(); ++i)
        if (verts_[i] == v) return verts_[(i + verts_.size() - 1) % verts_.size()];
    throw std::invalid_argument("vertex not on cycle");
}

SubsetCycleTable::SubsetCycleTable(const Graph& g) : n_(g.order()) {
    if (n_ > kMaxSubsetOrder)
        throw std::invalid_argument("subset cycle table supports order <= " +
                                    std::to_string(kMaxSubsetOrder));
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) adj[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.neighbors(v).bits());

    const std::size_t total = std::size_t{1} << n_;
    // path_end[S]: endpoints of hamiltonian paths of G[S] starting at min(S)
    std::vector<std::uint32_t> path_end(total, 0);
    hamiltonian_.assign(total, false);
    for (std::uint32_t s = 1; s < total; ++s) {
        const int r = std::countr_zero(s);
        if (s == (std::uint32_t{1} << r)) {
            path_end[s] = s;
            continue;
        }
        std::uint32_t ends = 0;
        std::uint32_t rest = s & ~(std::uint32_t{1} << r);
        for (std::uint32_t m = rest; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (path_end[s & ~(std::uint32_t{1} << v)] & adj[static_cast<std::size_t>(v)])
                ends |= std::uint32_t{1} << v;
        }
        path_end[s] = ends;
        if (std::popcount(s) >= 3 && (ends & adj[static_cast<std::size_t>(r)])) hamiltonian_[s] = true;
    }
}

bool SubsetCycleTable::cyclable(VertexSet s) const {
    return hamiltonian_[static_cast<std::size_t>(s.bits())];
}

std::vector<VertexSet> SubsetCycleTable::cyclable_sets() const {
    std::vector<VertexSet> out;
    for (std::size_t s = 0; s < hamiltonian_.size(); ++s)
        if (hamiltonian_[s]) out.emplace_back(static_cast<std::uint64_t>(s));
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
        if (a.size() != b.size()) return a.size() < b.size();
        auto va = a.to_vector(), vb = b.to_vector();
        return va < vb;
    });
    return out;
}

std::vector<int> SubsetCycleTable::cycle_lengths() const {
    std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
    for (std::size_t s = 0; s < hamiltonian_.size(); ++s)
        if (hamiltonian_[s]) seen[static_cast<std::size_t>(std::popcount(static_cast<std::uint64_t>(s)))] = true;
    std::vector<int> out;
    for (int l = 3; l <= n_; ++l)
        if (seen[static_cast<std::size_t>(l)]) out.push_back(l);
    return out;
}

bool SubsetCycleTable::extendable(VertexSet s) const {
    for (int u = 0; u < n_; ++u) {
        if (s.contains(u)) continue;
        if (hamiltonian_[static_cast<std::size_t>(s.bits() | (std::uint64_t{1} << u))]) return true;
    }
    return false;
}

namespace {

std::uint64_t reachable_within(const Graph& g, int from, std::uint64_t allowed) {
    std::uint64_t seen = std::uint64_t{1} << from;
    std::uint64_t frontier = seen;
    while (frontier) {
        std::uint64_t next = 0;
        for (int v : VertexSet(frontier)) next |= g.neighbors(v).bits();
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

struct HamSearch {
    const Graph& g;
    int n;
    std::uint64_t visited;

    explicit HamSearch(const Graph& graph) : g(graph), n(graph.order()), visited(1) {}

    bool extend(int current, int count) {
        if (count == n) return g.has_edge(current, 0);
        const std::uint64_t rest = g.vertices().bits() & ~visited;
        // Completion needs every remaining vertex to keep two usable links
        // and the remainder to stay reachable from the current endpoint.
        const std::uint64_t usable = rest | (std::uint64_t{1} << current) | 1u;
        for (int r : VertexSet(rest)) {
            if (std::popcount(g.neighbors(r).bits() & usable) < 2) return false;
        }
        if ((reachable_within(g, current, usable) & rest) != rest) return false;
        for (int v : VertexSet(g.neighbors(current).bits() & rest)) {
            visited |= std::uint64_t{1} << v;
            if (extend(v, count + 1)) return true;
            visited &= ~(std::uint64_t{1} << v);
        }
        return false;
    }
};

// Cycles with least vertex `start`: simple paths through vertices > start,
// closed back to start, orientation fixed by second < last.
struct CycleEnum {
    const Graph& g;
    int start;
    std::vector<int> path;
    std::uint64_t visited = 0;
    const std::function<void(const OrderedCycle&)>& visit;
    int exact_length;  // -1: enumerate everything

    CycleEnum(const Graph& graph, int s, const std::function<void(const OrderedCycle&)>& f, int exact)
        : g(graph), start(s), visit(f), exact_length(exact) {}

    void grow(int current) {
        for (int v : VertexSet(g.neighbors(current).bits() & ~visited)) {
            if (v <= start) continue;
            path.push_back(v);
            visited |= std::uint64_t{1} << v;
            const int len = static_cast<int>(path.size());
            if (len >= 3 && path[1] < path.back() && g.has_edge(v, start) &&
                (exact_length < 0 || len == exact_length))
                visit(OrderedCycle::over(g, path));
            if (exact_length < 0 || len < exact_length) grow(v);
            visited &= ~(std::uint64_t{1} << v);
            path.pop_back();
        }
    }

    void run() {
        path = {start};
        visited = std::uint64_t{1} << start;
        grow(start);
    }
};

struct StopEnumeration {};

}  // namespace

bool is_hamiltonian(const Graph& g) {
    if (g.order() < 3) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) < 2) return false;
    if (!is_connected(g)) return false;
    HamSearch search(g);
    return search.extend(0, 1);
}

bool has_cycle_of_order(const Graph& g, int l) {
    if (l < 3) throw std::invalid_argument("cycles have order >= 3");
    if (l > g.order()) return false;
    bool found = false;
    std::function<void(const OrderedCycle&)> hit = [&](const OrderedCycle&) {
        found = true;
        throw StopEnumeration{};
    };
    for (int s = 0; s + l <= g.order(); ++s) {
        CycleEnum en(g, s, hit, l);
        try {
            en.run();
        } catch (const StopEnumeration&) {
            return true;
        }
    }
    return found;
}

bool is_acyclic(const Graph& g) {
    // A forest has fewer edges than vertices in every induced subgraph;
    // peel degree-<=1 vertices until nothing changes.
    std::uint64_t alive = g.vertices().bits();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : VertexSet(alive)) {
            if (std::popcount(g.neighbors(v).bits() & alive) <= 1) {
                alive &= ~(std::uint64_t{1} << v);
                changed = true;
            }
        }
    }
    return alive == 0;
}

namespace {

// Exact girth: BFS from every root; non-tree edges close a cycle of length
// at most dist[x]+dist[y]+1, and a shortest cycle is realized this way.
std::optional<int> girth_bfs(const Graph& g) {
    const int n = g.order();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        queue.clear();
        queue.push_back(root);
        dist[static_cast<std::size_t>(root)] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int x = queue[qi];
            for (int y : g.neighbors(x)) {
                if (dist[static_cast<std::size_t>(y)] == -1) {
                    dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                    parent[static_cast<std::size_t>(y)] = x;
                    queue.push_back(y);
                } else if (parent[static_cast<std::size_t>(y)] != x && parent[static_cast<std::size_t>(x)] != y) {
                    best = std::min(best, dist[static_cast<std::size_t>(x)] + dist[static_cast<std::size_t>(y)] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

// Branch-and-bound longest cycle for orders beyond the subset table.
int longest_cycle_backtracking(const Graph& g) {
    struct Search {
        const Graph& g;
        int start = 0;
        int best = 0;
        std::uint64_t visited = 0;

        explicit Search(const Graph& graph) : g(graph) {}

        void grow(int current, int len) {
            const std::uint64_t avail = g.vertices().bits() & ~visited;
            const std::uint64_t reach = reachable_within(g, current, avail | (std::uint64_t{1} << current));
            if (len + std::popcount(reach & avail) <= best) return;
            for (int v : VertexSet(g.neighbors(current).bits() & avail)) {
                if (v <= start) continue;
                visited |= std::uint64_t{1} << v;
                if (len + 1 >= 3 && g.has_edge(v, start)) best = std::max(best, len + 1);
                grow(v, len + 1);
                visited &= ~(std::uint64_t{1} << v);
            }
        }
    };
    Search s(g);
    for (int start = 0; start < g.order(); ++start) {
        s.start = start;
        s.visited = std::uint64_t{1} << start;
        s.grow(start, 1);
    }
    return s.best;
}

}  // namespace

std::optional<std::pair<int, int>> girth_circumference(const Graph& g) {
    if (is_acyclic(g)) return std::nullopt;
    if (g.order() <= kMaxSubsetOrder) {
        const auto lengths = SubsetCycleTable(g).cycle_lengths();
        return std::make_pair(lengths.front(), lengths.back());
    }
    return std::make_pair(*girth_bfs(g), longest_cycle_backtracking(g));
}

bool is_weakly_pancyclic(const Graph& g) {
    const auto gc = girth_circumference(g);
    if (!gc) return true;  // acyclic: vacuous
    if (g.order() <= kMaxSubsetOrder) {
        const auto lengths = SubsetCycleTable(g).cycle_lengths();
        return static_cast<int>(lengths.size()) == gc->second - gc->first + 1;
    }
    for (int l = gc->first; l <= gc->second; ++l)
        if (!has_cycle_of_order(g, l)) return false;
    return true;
}

std::vector<VertexSet> cyclable_sets(const Graph& g) { return SubsetCycleTable(g).cyclable_sets(); }

bool is_cycle_extendable(const Graph& g, VertexSet s) {
    if (!s.is_subset_of(g.vertices())) throw std::invalid_argument("set contains non-vertices");
    if (s.size() >= g.order()) throw std::invalid_argument("set already spans the graph");
    if (s.size() < 3 || !is_hamiltonian(induce(g, s)))
        throw std::invalid_argument("set is not cyclable");
    for (int u : g.vertices() - s)
        if (is_hamiltonian(induce(g, s | VertexSet::of({u})))) return true;
    return false;
}

TriangleCover every_vertex_on_triangle(const Graph& g) {
    for (int u = 0; u < g.order(); ++u) {
        const VertexSet nb = g.neighbors(u);
        bool on_triangle = false;
        for (int v : nb) {
            if (!(g.neighbors(v) & nb).empty()) {
                on_triangle = true;
                break;
            }
        }
        if (!on_triangle) return {.holds = false, .vertex_witness = u};
    }
    return {};
}

std::string FceResult::witness_text() const {
    if (holds) return {};
    if (vertex_witness) return "vertex " + std::to_string(*vertex_witness) + " lies on no triangle";
    if (set_witness) {
        std::string s = "non-extendable cyclable set {";
        bool first = true;
        for (int v : *set_witness) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }
    return {};
}

FceResult is_fully_cycle_extendable(const Graph& g) {
    if (g.order() > kMaxSubsetOrder)
        throw std::invalid_argument("full cycle extendability supports order <= " +
                                    std::to_string(kMaxSubsetOrder));
    const auto cover = every_vertex_on_triangle(g);
    if (!cover.holds)
        return {.holds = false, .vertex_witness = cover.vertex_witness, .set_witness = std::nullopt};
    const SubsetCycleTable table(g);
    for (const VertexSet& s : table.cyclable_sets()) {
        if (s.size() >= g.order()) continue;
        if (!table.extendable(s)) return {.holds = false, .vertex_witness = std::nullopt, .set_witness = s};
    }
    return {};
}

void for_each_cycle(const Graph& g, const std::function<void(const OrderedCycle&)>& visit) {
    for (int s = 0; s + 3 <= g.order(); ++s) {
        CycleEnum en(g, s, visit, -1);
        en.run();
    }
}

std::vector<OrderedCycle> enumerate_cycles(const Graph& g) {
    std::vector<OrderedCycle> out;
    for_each_cycle(g, [&](const OrderedCycle& c) { out.push_back(c); });
    return out;
}

}  // namespace cyclex
