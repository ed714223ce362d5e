#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclex/graph.hpp"

namespace cyclex {

/// Exact cycle-spectrum machinery (per-subset hamiltonicity) is limited to
/// this order; the table costs O(2^n * n) time and memory.
inline constexpr int kMaxSubsetOrder = 20;

/// A cycle as a fixed cyclic vertex order c0,...,c_{m-1} (m >= 3, all
/// distinct, consecutive vertices adjacent, including the wrap edge).
class OrderedCycle {
public:
    static OrderedCycle over(const Graph& g, std::vector<int> verts);

    int length() const { return static_cast<int>(verts_.size()); }
    const std::vector<int>& vertices() const { return verts_; }
    VertexSet vertex_set() const;
    bool contains(int v) const;
    int successor(int v) const;
    int predecessor(int v) const;

private:
    explicit OrderedCycle(std::vector<int> verts) : verts_(std::move(verts)) {}
    std::vector<int> verts_;
};

/// Hamiltonicity of every induced subgraph of g at once, via the
/// path-endpoint subset recurrence rooted at each subset's least vertex.
class SubsetCycleTable {
public:
    explicit SubsetCycleTable(const Graph& g);

    bool cyclable(VertexSet s) const;
    /// Every cyclable set, ascending by size then lexicographic by
    /// ascending vertex tuple.
    std::vector<VertexSet> cyclable_sets() const;
    /// Realized cycle orders, ascending.
    std::vector<int> cycle_lengths() const;
    /// Is some cyclable superset of s exactly one vertex bigger?
    bool extendable(VertexSet s) const;

    int order() const { return n_; }

private:
    int n_;
    std::vector<bool> hamiltonian_;
};

/// Backtracking hamiltonicity test (independent of SubsetCycleTable).
bool is_hamiltonian(const Graph& g);

/// Exact: a cycle on exactly l vertices exists. l >= 3 required.
bool has_cycle_of_order(const Graph& g, int l);

/// (girth, circumference), or nullopt for acyclic graphs.
std::optional<std::pair<int, int>> girth_circumference(const Graph& g);

bool is_acyclic(const Graph& g);

/// Cycles of every order between girth and circumference. Acyclic graphs
/// count as vacuously true; callers that care should flag them.
bool is_weakly_pancyclic(const Graph& g);

/// Every set inducing a hamiltonian subgraph, ordered as in
/// SubsetCycleTable::cyclable_sets. Requires order <= kMaxSubsetOrder.
std::vector<VertexSet> cyclable_sets(const Graph& g);

/// Some vertex outside s completes a cyclable set one bigger. Throws if s
/// is not cyclable or already spans g.
bool is_cycle_extendable(const Graph& g, VertexSet s);

struct TriangleCover {
    bool holds = true;
    std::optional<int> vertex_witness;
};

/// Every vertex has two adjacent neighbors.
TriangleCover every_vertex_on_triangle(const Graph& g);

struct FceResult {
    bool holds = true;
    std::optional<int> vertex_witness;       // vertex on no triangle
    std::optional<VertexSet> set_witness;    // non-extendable cyclable set
    std::string witness_text() const;
};

/// Full cycle extendability: triangle cover plus every cyclable set smaller
/// than the whole vertex set extendable. Requires order <= kMaxSubsetOrder.
FceResult is_fully_cycle_extendable(const Graph& g);

/// Enumerates every cycle once: least vertex first, orientation fixed by
/// second vertex < last. Intended for small orders.
void for_each_cycle(const Graph& g, const std::function<void(const OrderedCycle&)>& visit);

std::vector<OrderedCycle> enumerate_cycles(const Graph& g);

}  // namespace cyclex
