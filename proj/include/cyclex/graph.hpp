#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclex {

/// Hard capacity: one adjacency row fits a single machine word.
inline constexpr int kMaxOrder = 64;

/// Subset of the vertices 0..n-1 of some graph, stored as a bitmask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }
    /// {0,...,n-1}
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    void add(int v) { bits_ |= std::uint64_t{1} << v; }
    void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }
    /// Smallest member; set must be nonempty.
    constexpr int first() const { return std::countr_zero(bits_); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    /// Set difference.
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr bool operator==(const VertexSet&) const = default;
    constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    /// Ascending iteration over members.
    class iterator {
    public:
        explicit iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
    private:
        std::uint64_t rest_;
    };
    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph on vertices 0..n-1, adjacency kept as
/// one bitset row per vertex. Symmetric and loop-free by construction.
class Graph {
public:
    explicit Graph(int n) : n_(check_order(n)) { rows_.fill(0); }

    Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge_checked(u, v);
    }
    Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge_checked(u, v);
    }

    /// Builds from raw adjacency rows; rejects asymmetry, loops, stray bits.
    static Graph from_rows(int n, std::span<const std::uint64_t> rows);

    int order() const { return n_; }
    int size() const;  // edge count

    bool has_edge(int u, int v) const { return (rows_[static_cast<std::size_t>(u)] >> v) & 1u; }
    VertexSet neighbors(int u) const { return VertexSet(rows_[static_cast<std::size_t>(u)]); }
    VertexSet closed_neighborhood(int u) const {
        return VertexSet(rows_[static_cast<std::size_t>(u)] | (std::uint64_t{1} << u));
    }
    int degree(int u) const { return std::popcount(rows_[static_cast<std::size_t>(u)]); }
    VertexSet vertices() const { return VertexSet::full(n_); }

    /// Value identity: same order and same labeled adjacency.
    bool operator==(const Graph& o) const;

    void check_vertex(int u) const {
        if (u < 0 || u >= n_) throw std::out_of_range("vertex index " + std::to_string(u) + " out of range");
    }

private:
    static int check_order(int n) {
        if (n < 1 || n > kMaxOrder)
            throw std::invalid_argument("graph order must be in 1.." + std::to_string(kMaxOrder));
        return n;
    }
    void add_edge_checked(int u, int v);

    int n_;
    std::array<std::uint64_t, kMaxOrder> rows_;
};

struct DegreeProfile {
    int min_degree = 0;
    int max_degree = 0;
    std::vector<int> sequence;  // descending
};

/// Vertices at shortest-path distance exactly k from u; k=0 yields {u}.
VertexSet distance_sets(const Graph& g, int u, int k);

/// Subgraph induced by the nonempty set s. Vertex i of the result is the
/// i-th smallest member of s.
Graph induce(const Graph& g, VertexSet s);

/// Members of s in ascending order: position i holds the original index of
/// induced vertex i.
std::vector<int> induced_mapping(VertexSet s);

bool is_connected(const Graph& g);

/// Max pairwise distance; nullopt when g is disconnected.
std::optional<int> diameter(const Graph& g);

DegreeProfile degree_profile(const Graph& g);

}  // namespace cyclex
