#include "doctest.h"
#include "helpers.hpp"
#include "minforest/errors.hpp"
#include "minforest/fixtures.hpp"
#include "minforest/oracle.hpp"

using namespace minforest;
using testutil::make_forest;

TEST_CASE("the chain-with-exit graph enumerates to its known table") {
    WeightedDigraph g = fixture_graph("unique_minima");
    ForestAtlas atlas = enumerate_atlas(g);

    CHECK(atlas.forest_count[1] == 1);
    CHECK(atlas.forest_count[2] == 5);
    CHECK(atlas.forest_count[3] == 4);
    CHECK(atlas.forest_count[4] == 1);
    CHECK(enumerate_forests(g, 2).size() == 5);

    CHECK(atlas.profile.min_weight[1] == ExtRational(7));
    CHECK(atlas.profile.min_weight[2] == ExtRational(3));
    CHECK(atlas.profile.min_weight[3] == ExtRational(1));
    CHECK(atlas.profile.min_weight[4] == ExtRational(0));

    for (int k = 1; k <= 3; ++k) CHECK(atlas.profile.sign_at(k) == ConvexitySign::Strict);
    for (int k = 1; k <= 4; ++k) CHECK(atlas.profile.strict_at(k));

    // each minimal family is the unique minimizer
    CHECK(atlas.family(1).forests ==
          std::vector<SpanningForest>{make_forest(g, {{"a", "c"}, {"b", "d"}, {"c", "b"}})});
    CHECK(atlas.family(2).forests ==
          std::vector<SpanningForest>{make_forest(g, {{"a", "c"}, {"b", "a"}})});
    CHECK(atlas.family(3).forests == std::vector<SpanningForest>{make_forest(g, {{"b", "a"}})});
    CHECK(atlas.family(4).forests == std::vector<SpanningForest>{SpanningForest::empty(g)});

    // weight histogram at k=2: 3, 4, 4, 5, 5
    const auto& hist = atlas.histogram[2];
    CHECK(hist.at(Rational(3)) == 1);
    CHECK(hist.at(Rational(4)) == 2);
    CHECK(hist.at(Rational(5)) == 2);
}

TEST_CASE("three tied spanning trees on the fed 2-cycle") {
    WeightedDigraph g = fixture_graph("tied_trees");
    ForestAtlas atlas = enumerate_atlas(g);
    CHECK(atlas.profile.min_weight[1] == ExtRational(6));
    CHECK(atlas.family(1).forests.size() == 3);
    CHECK(atlas.profile.min_weight[2] == ExtRational(3));
    CHECK(atlas.family(2).forests.size() == 2);
    CHECK(atlas.profile.min_weight[3] == ExtRational(1));
    for (int k = 1; k <= 3; ++k) CHECK(atlas.profile.sign_at(k) == ConvexitySign::Strict);
}

TEST_CASE("the path graph degenerates to an equal middle gap") {
    WeightedDigraph g = fixture_graph("equal_gap");
    ForestAtlas atlas = enumerate_atlas(g);
    CHECK(atlas.profile.min_weight[1] == ExtRational(5));
    CHECK(atlas.profile.min_weight[2] == ExtRational(3));
    CHECK(atlas.profile.min_weight[3] == ExtRational(1));
    CHECK(atlas.profile.min_weight[4] == ExtRational(0));
    CHECK(atlas.profile.sign_at(1) == ConvexitySign::Strict);
    CHECK(atlas.profile.sign_at(2) == ConvexitySign::Equal);
    CHECK(atlas.profile.sign_at(3) == ConvexitySign::Strict);
    CHECK_FALSE(atlas.profile.strict_at(2));
    CHECK(atlas.profile.equal_at(2));
}

TEST_CASE("gap signs outside their window are rejected") {
    WeightedDigraph g = fixture_graph("unique_minima");
    ForestAtlas atlas = enumerate_atlas(g);
    CHECK_THROWS_AS((void)atlas.profile.sign_at(0), DomainError);
    CHECK_THROWS_AS((void)atlas.profile.sign_at(4), DomainError);
    CHECK_THROWS_AS((void)atlas.profile.strict_at(0), DomainError);
    CHECK_THROWS_AS((void)atlas.profile.strict_at(5), DomainError);
    CHECK_THROWS_AS((void)atlas.family(0), DomainError);
}

TEST_CASE("empty low levels report an infinite minimum") {
    // two isolated vertices: no arcs at all, only the 2-tree forest exists
    WeightedDigraph g({"x", "y"}, {});
    ForestAtlas atlas = enumerate_atlas(g);
    CHECK(atlas.forest_count[1] == 0);
    CHECK(atlas.forest_count[2] == 1);
    CHECK_FALSE(atlas.profile.min_weight[1].is_finite());
    CHECK(atlas.profile.min_weight[2] == ExtRational(0));
    CHECK(atlas.profile.sign_at(1) == ConvexitySign::Undefined);
    CHECK(atlas.family(1).forests.empty());
    CHECK_FALSE(atlas.level_nonempty(1));
}

TEST_CASE("complete unit-weight graphs have level minima N - k") {
    std::vector<std::string> names = {"p", "q", "r", "s"};
    std::vector<Arc> arcs;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) arcs.push_back({i, j, Rational(1)});
    WeightedDigraph g(names, arcs);
    ForestAtlas atlas = enumerate_atlas(g);
    for (int k = 1; k <= 4; ++k)
        CHECK(atlas.profile.min_weight[static_cast<std::size_t>(k)] == ExtRational(4 - k));
    // every gap drops by exactly one: all equal except the infinite one at k=1
    CHECK(atlas.profile.sign_at(1) == ConvexitySign::Strict);
    CHECK(atlas.profile.sign_at(2) == ConvexitySign::Equal);
    CHECK(atlas.profile.sign_at(3) == ConvexitySign::Equal);
}

TEST_CASE("single vertex: the empty forest is the spanning tree") {
    WeightedDigraph g({"only"}, {});
    ForestAtlas atlas = enumerate_atlas(g);
    CHECK(atlas.forest_count[1] == 1);
    CHECK(atlas.profile.min_weight[1] == ExtRational(0));
    CHECK(atlas.family(1).forests == std::vector<SpanningForest>{SpanningForest::empty(g)});
}

TEST_CASE("levels are linked by single-tree hangs in both directions") {
    WeightedDigraph g = fixture_graph("unique_minima");
    ForestAtlas atlas = enumerate_atlas(g);
    for (int k = 1; k <= 3; ++k) {
        for (const SpanningForest& f : atlas.family(k + 1).forests)
            CHECK_FALSE(descendants_of(atlas, f).empty());
        for (const SpanningForest& r : atlas.family(k).forests)
            CHECK_FALSE(ancestors_of(atlas, r).empty());
    }
    // the k=3 minimum {b->a} descends to exactly the k=2 minimum {a->c, b->a}
    auto lower = descendants_of(atlas, atlas.family(3).forests.front());
    REQUIRE(lower.size() == 1);
    CHECK(lower.front() == make_forest(g, {{"a", "c"}, {"b", "a"}}));
}

TEST_CASE("oversized graphs are refused before enumeration starts") {
    std::vector<std::string> names;
    for (int i = 0; i < 13; ++i) names.push_back("n" + std::to_string(i));
    WeightedDigraph g(names, {});
    CHECK_THROWS_AS((void)enumerate_atlas(g), ResourceError);
    CHECK_NOTHROW((void)enumerate_atlas(g, 13));
}
