#include "cyclex/induced.hpp"

#include <algorithm>

namespace cyclex {

std::vector<int> InducedWitness::host_vertices() const {
    std::vector<int> vs = image;
    std::sort(vs.begin(), vs.end());
    return vs;
}

bool InducedWitness::validates(const Graph& host, const Graph& pattern) const {
    if (static_cast<int>(image.size()) != pattern.order()) return false;
    for (std::size_t a = 0; a < image.size(); ++a)
        for (std::size_t b = a + 1; b < image.size(); ++b) {
            if (image[a] == image[b]) return false;
            if (host.has_edge(image[a], image[b]) != pattern.has_edge(static_cast<int>(a), static_cast<int>(b)))
                return false;
        }
    return true;
}

namespace {

// Pattern vertices ordered degree-descending, each (after the first of its
// component) adjacent to an earlier pick, so candidate sets shrink early.
std::vector<int> matching_order(const Graph& pattern) {
    const int k = pattern.order();
    std::vector<int> order;
    std::uint64_t picked = 0;
    while (static_cast<int>(order.size()) < k) {
        int best = -1;
        bool best_linked = false;
        for (int v = 0; v < k; ++v) {
            if ((picked >> v) & 1u) continue;
            const bool linked = (pattern.neighbors(v).bits() & picked) != 0;
            if (best == -1 || (linked && !best_linked) ||
                (linked == best_linked && pattern.degree(v) > pattern.degree(best))) {
                best = v;
                best_linked = linked;
            }
        }
        order.push_back(best);
        picked |= std::uint64_t{1} << best;
    }
    return order;
}

struct Matcher {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> order;       // pattern vertices in matching order
    std::vector<int> image;       // pattern vertex -> host vertex (-1 unset)
    std::uint64_t used = 0;
    bool want_first = true;

    Matcher(const Graph& h, const Graph& p) : host(h), pattern(p), order(matching_order(p)) {
        image.assign(static_cast<std::size_t>(p.order()), -1);
    }

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        const int pv = order[depth];
        std::uint64_t cand = host.vertices().bits() & ~used;
        for (std::size_t j = 0; j < depth; ++j) {
            const int pu = order[j];
            const int hu = image[static_cast<std::size_t>(pu)];
            if (pattern.has_edge(pv, pu))
                cand &= host.neighbors(hu).bits();
            else
                cand &= ~host.neighbors(hu).bits();
        }
        const int need = pattern.degree(pv);
        for (int hv : VertexSet(cand)) {
            if (host.degree(hv) < need) continue;
            image[static_cast<std::size_t>(pv)] = hv;
            used |= std::uint64_t{1} << hv;
            if (extend(depth + 1)) return true;
            used &= ~(std::uint64_t{1} << hv);
            image[static_cast<std::size_t>(pv)] = -1;
        }
        return false;
    }
};

// Least mapping of pattern onto exactly the vertices of `subset`, trying
// host images in ascending order per pattern vertex; nullopt if none.
std::optional<std::vector<int>> least_mapping_on(const Graph& host, const Graph& pattern,
                                                 const std::vector<int>& subset) {
    const int k = pattern.order();
    std::vector<int> image(static_cast<std::size_t>(k), -1);
    std::vector<bool> used(subset.size(), false);
    auto rec = [&](auto&& self, int pv) -> bool {
        if (pv == k) return true;
        for (std::size_t i = 0; i < subset.size(); ++i) {
            if (used[i]) continue;
            const int hv = subset[i];
            bool ok = true;
            for (int pu = 0; pu < pv && ok; ++pu)
                ok = host.has_edge(hv, image[static_cast<std::size_t>(pu)]) == pattern.has_edge(pv, pu);
            if (!ok) continue;
            image[static_cast<std::size_t>(pv)] = hv;
            used[i] = true;
            if (self(self, pv + 1)) return true;
            used[i] = false;
        }
        return false;
    };
    if (rec(rec, 0)) return image;
    return std::nullopt;
}

// Visits k-subsets of 0..n-1 in lexicographic order of their sorted tuples.
template <typename F>
bool for_each_subset_lex(int n, int k, F&& visit) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (visit(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace

bool exists_induced(const Graph& host, const Graph& pattern) {
    if (pattern.order() > host.order()) return false;
    Matcher m(host, pattern);
    return m.extend(0);
}

std::optional<InducedWitness> find_induced(const Graph& host, const Graph& pattern) {
    if (pattern.order() < 1) throw std::invalid_argument("pattern must have at least one vertex");
    if (pattern.order() > host.order()) return std::nullopt;

    Matcher probe(host, pattern);
    if (!probe.extend(0)) return std::nullopt;

    if (host.order() > kLexWitnessMaxOrder) return InducedWitness{probe.image};

    std::optional<InducedWitness> result;
    for_each_subset_lex(host.order(), pattern.order(), [&](const std::vector<int>& subset) {
        auto image = least_mapping_on(host, pattern, subset);
        if (!image) return false;
        result = InducedWitness{*image};
        return true;
    });
    return result;
}

bool is_family_free(const Graph& host, std::span<const Graph> family) {
    for (const Graph& f : family)
        if (exists_induced(host, f)) return false;
    return true;
}

bool is_induced_subgraph_of(const Graph& f, const Graph& h) { return exists_induced(h, f); }

}  // namespace cyclex
