#include <set>

#include "doctest.h"
#include "minforest/errors.hpp"
#include "minforest/fixtures.hpp"
#include "minforest/graph_io.hpp"
#include "minforest/verifier.hpp"

using namespace minforest;

TEST_CASE("the check registry is complete and uniquely keyed") {
    const auto& registry = check_registry();
    CHECK(registry.size() == 28);
    std::set<std::string> ids;
    for (const CheckSpec& spec : registry) ids.insert(spec.id);
    CHECK(ids.size() == registry.size());
    CHECK(check_by_id("P1").kind == CheckKind::Property);
    CHECK(check_by_id("T11").kind == CheckKind::Theorem);
    CHECK(check_by_id("assemble").kind == CheckKind::Construction);
    CHECK_THROWS_AS((void)check_by_id("nope"), DomainError);
}

TEST_CASE("every check passes or skips on every fixture") {
    for (const Fixture& fixture : fixtures()) {
        CAPTURE(fixture.name);
        InstanceContext ctx(parse_graph(fixture.document), 42, 20);
        for (const CheckSpec& spec : check_registry()) {
            CAPTURE(spec.id);
            CheckOutcome outcome = spec.run(ctx);
            CHECK(outcome.verdict != Verdict::Fail);
            if (outcome.verdict == Verdict::Fail) MESSAGE(outcome.detail);
        }
    }
}

TEST_CASE("random graphs are reproducible and respect their parameters") {
    WeightedDigraph a = random_graph(99, 4, 0.8, 1, 4, WeightMode::SmallInts);
    WeightedDigraph b = random_graph(99, 4, 0.8, 1, 4, WeightMode::SmallInts);
    CHECK(a == b);
    CHECK(a.vertex_count() == 4);
    for (const Arc& arc : a.arcs()) {
        CHECK(arc.weight >= Rational(1));
        CHECK(arc.weight <= Rational(4));
    }
    WeightedDigraph c = random_graph(100, 4, 0.8, 1, 4, WeightMode::SmallInts);
    CHECK_FALSE(a == c);

    // distinct powers of two kill every weight tie
    WeightedDigraph p = random_graph(7, 4, 1.0, 1, 4, WeightMode::PowersOfTwo);
    std::set<Rational> weights;
    for (const Arc& arc : p.arcs()) weights.insert(arc.weight);
    CHECK(weights.size() == p.arcs().size());

    CHECK_THROWS_AS((void)random_graph(1, 0, 0.5, 1, 4, WeightMode::SmallInts), DomainError);
    CHECK_THROWS_AS((void)random_graph(1, 4, 0.5, 4, 1, WeightMode::SmallInts), DomainError);
    CHECK_THROWS_AS((void)random_graph(1, 9, 1.0, 1, 4, WeightMode::PowersOfTwo),
                    ResourceError);  // 72 arcs cannot get distinct 2^i weights in 64 bits
}

TEST_CASE("a small campaign passes and reports deterministically") {
    CampaignConfig config;
    config.seed = 3;
    config.instances = 8;
    config.max_n = 4;
    config.samples_per_instance = 5;
    CampaignReport first = run_campaign(config);
    CHECK(first.all_passed());
    CHECK(first.failures.empty());
    CHECK(first.instances_run ==
          static_cast<long long>(config.instances + fixtures().size()));
    CHECK(first.tallies.size() == check_registry().size());
    // the per-forest tree minimum check applies everywhere
    CHECK(first.tally("P1").pass == first.instances_run);
    CHECK(first.tally("P1").fail == 0);

    CampaignReport second = run_campaign(config);
    CHECK(first.machine() == second.machine());
    CHECK(first.text() == second.text());

    // a different seed reaches different instances
    config.seed = 4;
    CHECK_FALSE(run_campaign(config).machine() == first.machine());
}

TEST_CASE("fixtures-only campaigns skip random generation") {
    CampaignConfig config;
    config.fixtures_only = true;
    CampaignReport report = run_campaign(config);
    CHECK(report.all_passed());
    CHECK(report.instances_run == static_cast<long long>(fixtures().size()));
    // three fixtures carry exactly one equal gap each, all at k=2
    CHECK(report.observations.equality_levels == 3);
    CHECK(report.observations.equality_levels_with_unlabeled == 0);
    // the unguarded descent happens to match the enumeration on all of them
    CHECK(report.observations.equality_descend_agree == 3);
    CHECK(report.observations.equality_descend_disagree == 0);
    // one witness: the always-exiting atom realizes one of its two exit minima
    CHECK(report.observations.mixed_bottom_proper_inclusions == 1);
    CHECK(report.text().find("result: PASS") != std::string::npos);
    CHECK(report.machine().find("\"result\": \"pass\"") != std::string::npos);
}

TEST_CASE("instance contexts cache and expose the populated suffix") {
    InstanceContext ctx(fixture_graph("unique_minima"), 1, 4);
    CHECK(ctx.n() == 4);
    CHECK(ctx.populated_levels() == std::vector<int>{1, 2, 3, 4});
    const AtomPartition& part = ctx.partition(3);
    CHECK(&part == &ctx.partition(3));  // cached, not recomputed
    InstanceContext sparse(WeightedDigraph({"x", "y"}, {}), 1, 4);
    CHECK(sparse.populated_levels() == std::vector<int>{2});
}
