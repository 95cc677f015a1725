#include "minforest/atoms.hpp"

#include <algorithm>
#include <set>

#include "minforest/errors.hpp"

namespace minforest {

int AtomPartition::atom_of(int v) const {
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i].contains(v)) return static_cast<int>(i);
    throw DomainError("vertex outside every atom");
}

std::vector<VertexSet> AtomPartition::labeled_atoms() const {
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if (labeled[i]) out.push_back(atoms[i]);
    return out;
}

std::vector<VertexSet> AtomPartition::unlabeled_atoms() const {
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if (!labeled[i]) out.push_back(atoms[i]);
    return out;
}

bool AtomPartition::in_algebra(VertexSet d) const {
    VertexSet covered;
    for (const VertexSet& a : atoms) {
        VertexSet hit = a & d;
        if (hit.empty()) continue;
        if (!(hit == a)) return false;
        covered = covered | a;
    }
    return covered == d;
}

std::vector<VertexSet> tree_vertex_family(const std::vector<SpanningForest>& family) {
    std::set<VertexSet> seen;
    for (const SpanningForest& f : family)
        for (const TreeComponent& tc : trees_and_roots(f)) seen.insert(tc.vertices);
    return {seen.begin(), seen.end()};
}

namespace {

/// Definitional route, viable for small n: close the generators (plus the
/// full set) under complement and intersection, then pick out the elements
/// that no other element splits.
void closure_self_test(const std::vector<VertexSet>& generators, int n,
                       const std::vector<VertexSet>& atoms) {
    std::set<VertexSet> algebra{VertexSet::full(n)};
    for (const VertexSet& g : generators) algebra.insert(g);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<VertexSet> snapshot(algebra.begin(), algebra.end());
        for (const VertexSet& a : snapshot)
            grew |= algebra.insert(a.complement(n)).second;
        for (const VertexSet& a : snapshot)
            for (const VertexSet& b : snapshot)
                grew |= algebra.insert(a & b).second;
    }
    for (const VertexSet& atom : atoms) {
        if (!algebra.count(atom)) throw std::logic_error("computed atom missing from the closure");
        for (const VertexSet& b : algebra) {
            VertexSet hit = atom & b;
            if (!hit.empty() && !(hit == atom))
                throw std::logic_error("computed atom split by a closure element");
        }
    }
    for (const VertexSet& b : algebra) {
        VertexSet covered;
        for (const VertexSet& atom : atoms)
            if (!(atom & b).empty()) covered = covered | atom;
        if (!(covered == b)) throw std::logic_error("closure element is not a union of atoms");
    }
}

}  // namespace

std::vector<VertexSet> atoms_of(const std::vector<VertexSet>& generators, int n) {
    if (n < 1 || n > 31) throw DomainError("atoms_of: vertex count out of range");
    VertexSet full = VertexSet::full(n);
    for (const VertexSet& g : generators)
        if (!g.subset_of(full)) throw DomainError("atoms_of: generator outside the vertex set");
    std::set<VertexSet> distinct;
    for (int v = 0; v < n; ++v) {
        // The atom around v: intersect every generator containing v and the
        // complement of every generator avoiding it.
        VertexSet atom = full;
        for (const VertexSet& g : generators) atom = atom & (g.contains(v) ? g : g.complement(n));
        distinct.insert(atom);
    }
    std::vector<VertexSet> atoms(distinct.begin(), distinct.end());
    if (n <= 8) closure_self_test(generators, n, atoms);
    return atoms;
}

AtomPartition atom_partition(const ForestAtlas& atlas, int k) {
    const MinimalForestFamily& fam = atlas.family(k);
    if (fam.forests.empty())
        throw DomainError("atom_partition: no spanning forest with " + std::to_string(k) +
                          " trees");
    AtomPartition part;
    part.k = k;
    part.atoms = atoms_of(tree_vertex_family(fam.forests), atlas.graph->vertex_count());
    part.labeled.assign(part.atoms.size(), false);
    for (const SpanningForest& f : fam.forests) {
        VertexSet roots = f.roots();
        for (std::size_t i = 0; i < part.atoms.size(); ++i)
            if (!(part.atoms[i] & roots).empty()) part.labeled[i] = true;
    }
    return part;
}

AtomPartition atom_partition(const WeightedDigraph& graph, int k, int max_vertices) {
    ForestAtlas atlas = enumerate_atlas(graph, max_vertices);
    return atom_partition(atlas, k);
}

}  // namespace minforest
