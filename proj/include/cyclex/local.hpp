#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclex/graph.hpp"

namespace cyclex {

/// Induced path end1-center-end2: both ends adjacent to the center and not
/// to each other; end1 < end2.
struct InducedP3 {
    int end1;
    int center;
    int end2;

    bool operator==(const InducedP3&) const = default;
};

/// Every induced P3 of g, centers ascending, then end pairs ascending.
std::vector<InducedP3> induced_p3s(const Graph& g);

/// Outcome of a per-vertex or per-path local condition. Exactly one witness
/// field is set when the condition fails; it is the first failure in the
/// deterministic scan order.
struct ConditionReport {
    bool holds = true;
    std::optional<int> vertex_witness;
    std::optional<InducedP3> path_witness;

    std::string witness_text() const;
};

/// Every open neighborhood induces a connected graph. A vertex of degree 0
/// fails (empty neighborhood counts as disconnected); degree 1 passes.
ConditionReport is_locally_connected(const Graph& g);

/// |N(u) ∩ N(v)| + |N(u) ∩ N(w)| >= d(u) for every induced path v-u-w.
ConditionReport is_locally_ore(const Graph& g);

/// 2*min_degree(G[N(u)]) >= d(u) for every vertex; the min degree of an
/// empty neighborhood counts as 0.
ConditionReport is_locally_dirac(const Graph& g);

/// |N(u) ∩ N(v) ∩ N(w)| > |N(u) \ (N[v] ∪ N[w])| for every induced path
/// v-u-w (strict). Vacuously true without induced P3s.
ConditionReport satisfies_condition_e1(const Graph& g);

/// Left side of the neighborhood inequality at one induced path.
int triple_common_neighbors(const Graph& g, const InducedP3& p);

/// Right side: |N(center) \ (N[end1] ∪ N[end2])|.
int private_neighbors(const Graph& g, const InducedP3& p);

}  // namespace cyclex
