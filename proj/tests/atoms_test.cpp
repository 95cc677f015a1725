#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "minforest/atoms.hpp"
#include "minforest/errors.hpp"
#include "minforest/fixtures.hpp"

using namespace minforest;
using testutil::named_set;

TEST_CASE("atoms of explicit generator families") {
    // generators {0,1} and {1,2} over 4 vertices split into {0}, {1}, {2}, {3}
    auto atoms = atoms_of({VertexSet{0b0011}, VertexSet{0b0110}}, 4);
    REQUIRE(atoms.size() == 4);
    CHECK(atoms[0] == VertexSet{0b0001});
    CHECK(atoms[1] == VertexSet{0b0010});
    CHECK(atoms[2] == VertexSet{0b0100});
    CHECK(atoms[3] == VertexSet{0b1000});

    // a single generator splits the universe in two
    auto halves = atoms_of({VertexSet{0b0011}}, 4);
    REQUIRE(halves.size() == 2);
    CHECK(halves[0] == VertexSet{0b0011});
    CHECK(halves[1] == VertexSet{0b1100});

    // no generators: one atom, the whole universe
    auto whole = atoms_of({}, 3);
    REQUIRE(whole.size() == 1);
    CHECK(whole[0] == VertexSet::full(3));

    // nested generators produce the difference chain
    auto nested = atoms_of({VertexSet{0b0001}, VertexSet{0b0011}, VertexSet{0b0111}}, 4);
    REQUIRE(nested.size() == 4);
}

TEST_CASE("level partitions of the chain-with-exit graph") {
    WeightedDigraph g = fixture_graph("unique_minima");
    ForestAtlas atlas = enumerate_atlas(g);

    AtomPartition k3 = atom_partition(atlas, 3);
    REQUIRE(k3.atom_count() == 3);
    CHECK(k3.atoms[static_cast<std::size_t>(k3.atom_of(g.index_of("a")))] ==
          named_set(g, {"a", "b"}));
    CHECK(k3.atom_of(g.index_of("a")) == k3.atom_of(g.index_of("b")));
    CHECK(std::count(k3.labeled.begin(), k3.labeled.end(), true) == 3);
    CHECK(k3.labeled_atoms().size() == 3);
    CHECK(k3.unlabeled_atoms().empty());
    CHECK(k3.in_algebra(named_set(g, {"a", "b", "d"})));
    CHECK_FALSE(k3.in_algebra(named_set(g, {"a"})));
    CHECK(k3.in_algebra(VertexSet{}));

    AtomPartition k1 = atom_partition(atlas, 1);
    CHECK(k1.atom_count() == 1);
    CHECK(k1.atoms.front() == g.vertices());

    AtomPartition k4 = atom_partition(atlas, 4);
    CHECK(k4.atom_count() == 4);
    CHECK(std::count(k4.labeled.begin(), k4.labeled.end(), true) == 4);
}

TEST_CASE("level partitions of the fed 2-cycle keep the cycle together") {
    WeightedDigraph g = fixture_graph("tied_trees");
    ForestAtlas atlas = enumerate_atlas(g);
    AtomPartition k3 = atom_partition(atlas, 3);
    REQUIRE(k3.atom_count() == 3);
    std::vector<VertexSet> expected = {named_set(g, {"I"}), named_set(g, {"J"}),
                                       named_set(g, {"L", "L'"})};
    std::sort(expected.begin(), expected.end());
    CHECK(k3.atoms == expected);
    CHECK(k3.labeled_atoms().size() == 3);
}

TEST_CASE("labeled atoms split from unlabeled ones where trees overlap") {
    WeightedDigraph g = fixture_graph("missing_exit");
    ForestAtlas atlas = enumerate_atlas(g);
    AtomPartition k3 = atom_partition(atlas, 3);
    REQUIRE(k3.atom_count() == 3);
    std::vector<VertexSet> expected = {named_set(g, {"Z"}), named_set(g, {"L"}),
                                       named_set(g, {"I", "J"})};
    std::sort(expected.begin(), expected.end());
    CHECK(k3.atoms == expected);
    CHECK(k3.labeled_atoms().size() == 3);

    // at the spanning-tree level the single atom carries the root
    AtomPartition k1 = atom_partition(atlas, 1);
    REQUIRE(k1.atom_count() == 1);
    CHECK(k1.labeled == std::vector<bool>{true});
}

TEST_CASE("a level with no forests rejects the partition request") {
    WeightedDigraph g({"x", "y"}, {});
    ForestAtlas atlas = enumerate_atlas(g);
    CHECK_THROWS_AS((void)atom_partition(atlas, 1), DomainError);
    CHECK_NOTHROW((void)atom_partition(atlas, 2));
}

TEST_CASE("partition equality covers both atoms and labels") {
    WeightedDigraph g = fixture_graph("equal_gap");
    ForestAtlas atlas = enumerate_atlas(g);
    // equal gap at 2 freezes the partition between levels 2 and 3
    CHECK(atom_partition(atlas, 2) == atom_partition(atlas, 3));
    CHECK_FALSE(atom_partition(atlas, 2) == atom_partition(atlas, 4));
}
