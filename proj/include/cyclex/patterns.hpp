#pragma once

#include <string>
#include <vector>

#include "cyclex/graph.hpp"

namespace cyclex {

/// The named graphs and forbidden-family members used throughout.
/// Parameterized kinds carry their order in PatternId::n.
enum class PatternKind {
    Kn,        // complete graph
    Pn,        // path
    Cn,        // cycle
    Star,      // K_{1,n-1}
    Claw,      // K_{1,3}
    Paw,       // K_1 + (K_1 u K_2)
    Gem,       // K_1 + P_4
    K113,      // K_1 + K_1 + complement(K_3)
    K1P3,      // K_1 + P_3
    K1K1uP3,   // K_1 + (K_1 u P_3)
    K14,       // K_{1,4}
    K2K1uK2,   // K_2 + (K_1 u K_2)
    Xgraph,    // triangle with a pendant on each corner plus a universal vertex
};

struct PatternId {
    PatternKind kind;
    int n = 0;  // only meaningful for Kn/Pn/Cn/Star

    static PatternId complete(int n) { return {PatternKind::Kn, n}; }
    static PatternId path(int n) { return {PatternKind::Pn, n}; }
    static PatternId cycle(int n) { return {PatternKind::Cn, n}; }
    static PatternId star(int n) { return {PatternKind::Star, n}; }
    static PatternId fixed(PatternKind k) { return {k, 0}; }

    bool operator==(const PatternId&) const = default;
};

/// Disjoint union; vertices of h are shifted past those of g.
Graph union_of(const Graph& g, const Graph& h);

/// Join: union plus every cross edge.
Graph join_of(const Graph& g, const Graph& h);

/// Edge complement with the same labeling.
Graph complement_of(const Graph& g);

/// Canonical construction for a pattern id. Throws std::invalid_argument on
/// bad parameters (e.g. a cycle of order < 3).
Graph named_graph(PatternId id);

std::string pattern_name(PatternId id);

/// The fixed (non-parameterized) catalog entries, in the order reports list
/// them: Claw, K1P3, Paw, Gem, K113, K1K1uP3, K14, K2K1uK2, Xgraph.
std::vector<PatternId> catalog_patterns();

}  // namespace cyclex
