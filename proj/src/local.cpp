#include "cyclex/local.hpp"

namespace cyclex {

std::vector<InducedP3> induced_p3s(const Graph& g) {
    std::vector<InducedP3> out;
    for (int u = 0; u < g.order(); ++u) {
        const VertexSet nb = g.neighbors(u);
        for (int v : nb) {
            for (int w : nb) {
                if (w <= v) continue;
                if (!g.has_edge(v, w)) out.push_back({v, u, w});
            }
        }
    }
    return out;
}

std::string ConditionReport::witness_text() const {
    if (holds) return {};
    if (vertex_witness) return "vertex " + std::to_string(*vertex_witness);
    if (path_witness)
        return "path " + std::to_string(path_witness->end1) + "-" + std::to_string(path_witness->center) +
               "-" + std::to_string(path_witness->end2);
    return {};
}

ConditionReport is_locally_connected(const Graph& g) {
    for (int u = 0; u < g.order(); ++u) {
        const VertexSet nb = g.neighbors(u);
        if (nb.empty() || !is_connected(induce(g, nb)))
            return {.holds = false, .vertex_witness = u, .path_witness = std::nullopt};
    }
    return {};
}

ConditionReport is_locally_ore(const Graph& g) {
    for (const InducedP3& p : induced_p3s(g)) {
        const VertexSet nu = g.neighbors(p.center);
        const int lhs = (nu & g.neighbors(p.end1)).size() + (nu & g.neighbors(p.end2)).size();
        if (lhs < g.degree(p.center)) return {.holds = false, .vertex_witness = std::nullopt, .path_witness = p};
    }
    return {};
}

ConditionReport is_locally_dirac(const Graph& g) {
    for (int u = 0; u < g.order(); ++u) {
        const VertexSet nb = g.neighbors(u);
        int min_deg = 0;
        if (!nb.empty()) {
            const Graph h = induce(g, nb);
            min_deg = degree_profile(h).min_degree;
        }
        if (2 * min_deg < g.degree(u))
            return {.holds = false, .vertex_witness = u, .path_witness = std::nullopt};
    }
    return {};
}

int triple_common_neighbors(const Graph& g, const InducedP3& p) {
    return (g.neighbors(p.center) & g.neighbors(p.end1) & g.neighbors(p.end2)).size();
}

int private_neighbors(const Graph& g, const InducedP3& p) {
    return (g.neighbors(p.center) - g.closed_neighborhood(p.end1) - g.closed_neighborhood(p.end2)).size();
}

ConditionReport satisfies_condition_e1(const Graph& g) {
    for (const InducedP3& p : induced_p3s(g)) {
        if (triple_common_neighbors(g, p) <= private_neighbors(g, p))
            return {.holds = false, .vertex_witness = std::nullopt, .path_witness = p};
    }
    return {};
}

}  // namespace cyclex
