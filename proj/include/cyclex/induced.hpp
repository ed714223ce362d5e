#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cyclex/graph.hpp"

namespace cyclex {

/// Host order up to which find_induced returns the canonical witness
/// (lexicographically least host vertex set, then least mapping). Beyond
/// this the witness is still deterministic but comes straight from the
/// pruned backtracker.
inline constexpr int kLexWitnessMaxOrder = 24;

/// An induced embedding: image[p] is the host vertex playing pattern
/// vertex p. Edges and non-edges are both preserved.
struct InducedWitness {
    std::vector<int> image;

    std::vector<int> host_vertices() const;  // sorted
    bool validates(const Graph& host, const Graph& pattern) const;
};

/// Does pattern occur in host as an induced subgraph?
bool exists_induced(const Graph& host, const Graph& pattern);

/// Witness of an induced occurrence, or nullopt.
std::optional<InducedWitness> find_induced(const Graph& host, const Graph& pattern);

/// True iff no member of the family occurs induced. Empty family passes.
bool is_family_free(const Graph& host, std::span<const Graph> family);

bool is_induced_subgraph_of(const Graph& f, const Graph& h);

}  // namespace cyclex
