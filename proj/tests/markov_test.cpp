#include <cmath>

#include "doctest.h"
#include "minforest/errors.hpp"
#include "minforest/fixtures.hpp"
#include "minforest/markov.hpp"

using namespace minforest;

TEST_CASE("coefficient exponents track the level minima within the count bound") {
    WeightedDigraph g = fixture_graph("unique_minima");
    ForestAtlas atlas = enumerate_atlas(g);
    for (double eps : {0.05, 0.02, 0.01}) {
        CAPTURE(eps);
        CoefficientProfile profile = coefficient_profile(atlas, eps);
        CHECK(profile.epsilon == eps);
        REQUIRE(profile.levels.size() == 5);
        CHECK_FALSE(profile.levels[0].positive);
        for (int l = 1; l <= 4; ++l) {
            const CoefficientLevel& level = profile.levels[static_cast<std::size_t>(l)];
            REQUIRE(level.positive);
            double phi = level.min_weight.finite().to_double();
            CHECK(std::abs(level.exponent_estimate - phi) <= level.gap_bound + 1e-12);
            CHECK(level.gap_bound ==
                  doctest::Approx(eps * std::log(static_cast<double>(level.forest_count))));
        }
        // lone minimizers reproduce the minimum with no rounding residue
        CHECK(profile.levels[1].exponent_estimate == 7.0);
        CHECK(profile.levels[4].exponent_estimate == 0.0);
    }
}

TEST_CASE("colder temperatures sharpen the exponent estimate") {
    WeightedDigraph g = fixture_graph("tied_trees");
    ForestAtlas atlas = enumerate_atlas(g);
    double warm = std::abs(coefficient_profile(atlas, 0.1).levels[2].exponent_estimate - 3.0);
    double cold = std::abs(coefficient_profile(atlas, 0.01).levels[2].exponent_estimate - 3.0);
    CHECK(cold <= warm);
}

TEST_CASE("the determinant agrees with the forest sum") {
    WeightedDigraph g = fixture_graph("unique_minima");
    ForestAtlas atlas = enumerate_atlas(g);
    MatrixForestCheck check = verify_matrix_forest(atlas, 1.0, {0.5, 1.0, 2.0});
    CHECK(check.max_relative_deviation <= 1e-9);
    CHECK_FALSE(check.ill_conditioned);

    for (const char* name : {"tied_trees", "strict_gaps", "equal_gap", "missing_exit", "tied_levels"}) {
        CAPTURE(name);
        WeightedDigraph other = fixture_graph(name);
        ForestAtlas other_atlas = enumerate_atlas(other);
        CHECK(verify_matrix_forest(other_atlas, 1.0, {0.5, 1.0, 2.0}).max_relative_deviation <=
              1e-9);
    }
}

TEST_CASE("levels without forests stay flagged non-positive") {
    WeightedDigraph g({"x", "y"}, {});
    ForestAtlas atlas = enumerate_atlas(g);
    CoefficientProfile profile = coefficient_profile(atlas, 0.05);
    CHECK_FALSE(profile.levels[1].positive);
    CHECK(profile.levels[1].forest_count == 0);
    CHECK(profile.levels[2].positive);
    CHECK(profile.levels[2].exponent_estimate == 0.0);
}

TEST_CASE("domain errors on non-positive parameters") {
    WeightedDigraph g = fixture_graph("unique_minima");
    ForestAtlas atlas = enumerate_atlas(g);
    CHECK_THROWS_AS((void)coefficient_profile(atlas, 0.0), DomainError);
    CHECK_THROWS_AS((void)coefficient_profile(atlas, -0.5), DomainError);
    CHECK_THROWS_AS((void)verify_matrix_forest(atlas, 0.0, {1.0}), DomainError);
    CHECK_THROWS_AS((void)verify_matrix_forest(atlas, 1.0, {0.0}), DomainError);
    CHECK_THROWS_AS((void)verify_matrix_forest(atlas, 1.0, {-1.0}), DomainError);
}
