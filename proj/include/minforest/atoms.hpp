#pragma once

#include <vector>

#include "minforest/oracle.hpp"

namespace minforest {

/// Atoms of the set algebra generated by the tree vertex sets of a minimal
/// family, with the root-carrying atoms flagged.
struct AtomPartition {
    int k = 0;
    std::vector<VertexSet> atoms;  // ascending by mask; a partition of the vertices
    std::vector<bool> labeled;     // parallel: atom holds a root of some minimal forest

    int atom_count() const { return static_cast<int>(atoms.size()); }
    /// Index of the atom containing v.
    int atom_of(int v) const;
    std::vector<VertexSet> labeled_atoms() const;
    std::vector<VertexSet> unlabeled_atoms() const;
    /// Whether d is a union of atoms (an algebra element).
    bool in_algebra(VertexSet d) const;

    bool operator==(const AtomPartition& o) const {
        return atoms == o.atoms && labeled == o.labeled;
    }
};

/// Vertex sets of all trees across the family, sorted and deduplicated.
std::vector<VertexSet> tree_vertex_family(const std::vector<SpanningForest>& family);

/// Atoms of the algebra generated by the given subsets of {0..n-1}: classes
/// of the "same generators contain me" relation. With no generators the
/// whole vertex set is the single atom. For n <= 8 the result is re-derived
/// from the explicit closure under complement and intersection as a
/// self-test.
std::vector<VertexSet> atoms_of(const std::vector<VertexSet>& generators, int n);

/// Atoms at level k generated by the minimal k-forest family's tree vertex
/// sets; domain error when no k-forest exists.
AtomPartition atom_partition(const ForestAtlas& atlas, int k);
AtomPartition atom_partition(const WeightedDigraph& graph, int k,
                             int max_vertices = kDefaultEnumerationLimit);

}  // namespace minforest
