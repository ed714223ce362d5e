#include "cyclex/canonical.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_set>

namespace cyclex {

namespace {

std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Iteratively refined vertex invariant: starts from the degree, then folds in
// the sorted multiset of neighbor invariants. Invariant under relabeling, so
// restricting candidate orderings to invariant classes keeps the minimum
// adjacency string a complete isomorphism certificate.
std::vector<std::uint64_t> vertex_invariants(const Graph& g) {
    const int n = g.order();
    std::vector<std::uint64_t> inv(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) inv[static_cast<std::size_t>(v)] = static_cast<std::uint64_t>(g.degree(v));
    std::vector<std::uint64_t> next(static_cast<std::size_t>(n));
    std::vector<std::uint64_t> around;
    for (int round = 0; round < 3; ++round) {
        for (int v = 0; v < n; ++v) {
            around.clear();
            for (int w : g.neighbors(v)) around.push_back(inv[static_cast<std::size_t>(w)]);
            std::sort(around.begin(), around.end());
            std::uint64_t h = mix(inv[static_cast<std::size_t>(v)]);
            for (std::uint64_t a : around) h = mix(h ^ a);
            next[static_cast<std::size_t>(v)] = h;
        }
        inv.swap(next);
    }
    return inv;
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<std::vector<int>> blocks;   // candidate vertices per position block
    std::vector<int> block_of_position;
    std::vector<int> perm;                  // position -> original vertex
    std::vector<std::uint64_t> rowbits;     // adjacency bits of position p vs positions < p
    std::vector<std::uint64_t> best_rows;
    std::vector<int> best_perm;
    std::uint64_t used = 0;
    bool have_best = false;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {
        auto inv = vertex_invariants(g);
        std::map<std::uint64_t, std::vector<int>> by_inv;
        for (int v = 0; v < n; ++v) by_inv[inv[static_cast<std::size_t>(v)]].push_back(v);
        for (auto& [key, vs] : by_inv) {
            for (std::size_t i = 0; i < vs.size(); ++i)
                block_of_position.push_back(static_cast<int>(blocks.size()));
            blocks.push_back(std::move(vs));
        }
        perm.assign(static_cast<std::size_t>(n), -1);
        rowbits.assign(static_cast<std::size_t>(n), 0);
    }

    // state: 0 = prefix equals the best so far, -1 = strictly smaller.
    // Returns whether the subtree replaced best; when it did, the caller's
    // prefix coincides with the new best, so later siblings compare afresh.
    bool descend(int p, int state) {
        if (p == n) {
            if (!have_best || state < 0) {
                best_rows = rowbits;
                best_perm = perm;
                have_best = true;
                return true;
            }
            return false;
        }
        bool updated = false;
        for (int v : blocks[static_cast<std::size_t>(block_of_position[static_cast<std::size_t>(p)])]) {
            if ((used >> v) & 1u) continue;
            std::uint64_t row = 0;
            for (int j = 0; j < p; ++j)
                row = (row << 1) | (g.has_edge(v, perm[static_cast<std::size_t>(j)]) ? 1u : 0u);
            int next_state = state;
            if (have_best && state == 0) {
                if (row > best_rows[static_cast<std::size_t>(p)]) continue;
                if (row < best_rows[static_cast<std::size_t>(p)]) next_state = -1;
            }
            perm[static_cast<std::size_t>(p)] = v;
            rowbits[static_cast<std::size_t>(p)] = row;
            used |= std::uint64_t{1} << v;
            if (descend(p + 1, next_state)) {
                updated = true;
                state = 0;
            }
            used &= ~(std::uint64_t{1} << v);
        }
        return updated;
    }

    void run() {
        if (g.order() > kMaxCertificateOrder)
            throw std::invalid_argument("canonicalization supports order <= " +
                                        std::to_string(kMaxCertificateOrder));
        descend(0, 0);
    }

    std::uint64_t packed() const {
        std::uint64_t acc = 0;
        for (int p = 1; p < n; ++p) acc = (acc << p) | best_rows[static_cast<std::size_t>(p)];
        return acc;
    }
};

}  // namespace

std::string CanonicalCertificate::to_bytes() const {
    std::string out;
    out.push_back(static_cast<char>(order));
    for (int i = 7; i >= 0; --i) out.push_back(static_cast<char>((code >> (8 * i)) & 0xff));
    return out;
}

std::string CanonicalCertificate::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (char c : to_bytes()) {
        out.push_back(digits[(static_cast<unsigned char>(c) >> 4) & 0xf]);
        out.push_back(digits[static_cast<unsigned char>(c) & 0xf]);
    }
    return out;
}

CanonicalCertificate canonical_certificate(const Graph& g) {
    CanonSearch search(g);
    search.run();
    return {static_cast<std::uint8_t>(g.order()), search.packed()};
}

Graph canonical_form(const Graph& g) {
    CanonSearch search(g);
    search.run();
    const int n = g.order();
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (g.has_edge(search.best_perm[static_cast<std::size_t>(p)],
                           search.best_perm[static_cast<std::size_t>(q)])) {
                rows[static_cast<std::size_t>(p)] |= std::uint64_t{1} << q;
                rows[static_cast<std::size_t>(q)] |= std::uint64_t{1} << p;
            }
    return Graph::from_rows(n, rows);
}

Graph relabel(const Graph& g, std::span<const int> new_label) {
    const int n = g.order();
    if (static_cast<int>(new_label.size()) != n)
        throw std::invalid_argument("relabeling must cover every vertex");
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            rows[static_cast<std::size_t>(new_label[static_cast<std::size_t>(u)])] |=
                std::uint64_t{1} << new_label[static_cast<std::size_t>(v)];
    return Graph::from_rows(n, rows);
}

namespace {

// All-graphs lists are grown one vertex at a time: every order-k graph arises
// from an order-(k-1) graph by attaching a new vertex to some neighbor subset,
// so extending every representative by every subset and deduplicating on the
// certificate covers each class exactly once.
const std::vector<Graph>& all_graphs_of_order(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<const std::vector<Graph>>> cache;
    std::scoped_lock lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
    for (int k = 1; k <= n; ++k) {
        if (cache.contains(k)) continue;
        std::vector<Graph> reps;
        if (k == 1) {
            reps.emplace_back(1);
        } else {
            const auto& smaller = *cache.at(k - 1);
            std::unordered_set<std::uint64_t> seen;
            std::vector<std::pair<std::uint64_t, Graph>> found;
            for (const Graph& base : smaller) {
                std::vector<std::uint64_t> rows(static_cast<std::size_t>(k), 0);
                for (int u = 0; u < k - 1; ++u) rows[static_cast<std::size_t>(u)] = base.neighbors(u).bits();
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
                    auto ext = rows;
                    ext[static_cast<std::size_t>(k - 1)] = mask;
                    for (int u : VertexSet(mask)) ext[static_cast<std::size_t>(u)] |= std::uint64_t{1} << (k - 1);
                    const Graph h = Graph::from_rows(k, ext);
                    const auto cert = canonical_certificate(h);
                    if (seen.insert(cert.code).second) found.emplace_back(cert.code, canonical_form(h));
                }
            }
            std::sort(found.begin(), found.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            reps.reserve(found.size());
            for (auto& [code, graph] : found) reps.push_back(std::move(graph));
        }
        cache.emplace(k, std::make_unique<const std::vector<Graph>>(std::move(reps)));
    }
    return *cache.at(n);
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw std::invalid_argument("built-in enumeration supports order 1.." +
                                    std::to_string(kMaxEnumerationOrder));
    const auto& all = all_graphs_of_order(n);
    std::vector<Graph> out;
    for (const Graph& g : all)
        if (!connected_only || is_connected(g)) out.push_back(g);
    return out;
}

}  // namespace cyclex
