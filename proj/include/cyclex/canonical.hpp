#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cyclex/graph.hpp"

namespace cyclex {

/// Capacity of the exhaustive-permutation canonicalization scheme.
inline constexpr int kMaxCertificateOrder = 10;

/// Labeling-invariant identity of an isomorphism class at fixed order:
/// the minimal lower-triangle adjacency bitstring over all admissible
/// relabelings (at most 10*9/2 = 45 bits, packed into one word).
struct CanonicalCertificate {
    std::uint8_t order = 0;
    std::uint64_t code = 0;

    auto operator<=>(const CanonicalCertificate&) const = default;

    /// 9 bytes: order, then code big-endian; lexicographic byte order
    /// matches certificate order.
    std::string to_bytes() const;
    std::string to_hex() const;
};

CanonicalCertificate canonical_certificate(const Graph& g);

/// The relabeled graph realizing the certificate. Two graphs are isomorphic
/// iff their canonical forms are equal.
Graph canonical_form(const Graph& g);

/// Relabeled copy: vertex v of g becomes new_label[v].
Graph relabel(const Graph& g, std::span<const int> new_label);

/// Built-in generator capacity; larger orders must arrive via graph6 files.
inline constexpr int kMaxEnumerationOrder = 8;

/// One representative per isomorphism class of order n, in ascending
/// certificate order. Results are cached internally per order.
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

}  // namespace cyclex
