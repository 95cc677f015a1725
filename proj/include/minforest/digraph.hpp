#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "minforest/rational.hpp"

namespace minforest {

/// Subset of the vertices {0..N-1} of one graph, as a bitmask. N <= 31.
struct VertexSet {
    std::uint32_t bits = 0;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint32_t b) : bits(b) {}
    static constexpr VertexSet full(int n) { return VertexSet((std::uint32_t{1} << n) - 1); }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint32_t{1} << v); }

    constexpr bool contains(int v) const { return (bits >> v) & 1u; }
    constexpr bool empty() const { return bits == 0; }
    constexpr int count() const { return std::popcount(bits); }
    constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits | o.bits); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits & o.bits); }
    constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits & ~o.bits); }
    constexpr VertexSet complement(int n) const { return full(n).minus(*this); }
    VertexSet& add(int v) {
        bits |= std::uint32_t{1} << v;
        return *this;
    }

    constexpr bool operator==(const VertexSet&) const = default;
    constexpr bool operator<(const VertexSet& o) const { return bits < o.bits; }

    /// Ascending vertex indices.
    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for (std::uint32_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }
};

struct Arc {
    int from = 0;
    int to = 0;
    Rational weight;
};

/// Weighted digraph on named vertices; no self-loops, at most one arc per
/// ordered pair. Vertices are referred to by index almost everywhere, names
/// only matter at the I/O boundary.
class WeightedDigraph {
  public:
    WeightedDigraph(std::vector<std::string> vertex_names,
                    std::vector<Arc> arcs);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    VertexSet vertices() const { return VertexSet::full(vertex_count()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
    /// Index of a named vertex, or -1.
    int index_of(const std::string& name) const;

    /// Arcs sorted by (from, to).
    const std::vector<Arc>& arcs() const { return arcs_; }
    /// Arc index for the ordered pair, or -1.
    int arc_index(int from, int to) const {
        return adjacency_[static_cast<std::size_t>(from) * names_.size() +
                          static_cast<std::size_t>(to)];
    }
    bool has_arc(int from, int to) const { return arc_index(from, to) >= 0; }
    /// Weight of an existing arc; domain error otherwise.
    const Rational& weight(int from, int to) const;
    /// Targets of arcs leaving v, ascending.
    const std::vector<int>& out_targets(int v) const {
        return out_targets_[static_cast<std::size_t>(v)];
    }

    /// Structural identity (names, arcs, weights).
    bool operator==(const WeightedDigraph& o) const;

    /// Throws DomainError unless D is a subset of this graph's vertices.
    void require_subset(VertexSet d, const char* what) const;

  private:
    std::vector<std::string> names_;
    std::vector<Arc> arcs_;
    std::vector<int> adjacency_;  // N*N arc indices, -1 = absent
    std::vector<std::vector<int>> out_targets_;
};

/// Human-readable "{a,b,c}" using the graph's vertex names.
std::string set_str(const WeightedDigraph& graph, VertexSet d);

}  // namespace minforest
