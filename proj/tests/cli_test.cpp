#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "minforest/commands.hpp"

using minforest::run_cli;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("analyze prints the level table and atoms") {
    CliResult r = run({"analyze", "--fixture", "unique_minima"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "4 vertices, 4 arcs"));
    CHECK(contains(r.out, "strict"));
    CHECK(contains(r.out, "{a,b}*"));
    CHECK(contains(r.out, "7"));

    CliResult machine = run({"analyze", "--fixture", "unique_minima", "--format", "machine"});
    CHECK(machine.code == 0);
    CHECK(contains(machine.out, "\"min\": \"7\""));
    CHECK(contains(machine.out, "\"sign\": \"strict\""));

    CliResult hist = run({"analyze", "--fixture", "unique_minima", "--histogram"});
    CHECK(contains(hist.out, "x2"));  // two 2-tree forests weigh 4
}

TEST_CASE("minima answers both modes with exact values") {
    CliResult rooted = run({"minima", "--fixture", "unique_minima", "-D", "a,b"});
    CHECK(rooted.code == 0);
    CHECK(contains(rooted.out, "rooted-tree minimum on {a,b}: 1"));
    CHECK(contains(rooted.out, "b->a"));
    CHECK(contains(rooted.out, "inf"));  // no tree roots at b

    CliResult exit = run({"minima", "--fixture", "unique_minima", "-D", "a,b", "--mode", "exit"});
    CHECK(exit.code == 0);
    CHECK(contains(exit.out, "exit-tree minimum on {a,b}: 3"));
    CHECK(contains(exit.out, "a->c"));

    // the full vertex set has nowhere to exit
    CliResult full = run({"minima", "--fixture", "unique_minima", "-D", "a,b,c,d", "--mode", "exit"});
    CHECK(full.code == 1);
    CHECK(contains(full.err, "minforest minima:"));

    CliResult unknown = run({"minima", "--fixture", "unique_minima", "-D", "a,zzz"});
    CHECK(unknown.code == 1);
    CHECK(contains(unknown.err, "unknown vertex"));
}

TEST_CASE("assemble and descend report the constructed families") {
    CliResult assembled = run({"assemble", "--fixture", "tied_trees", "-k", "2"});
    CHECK(assembled.code == 0);
    CHECK(contains(assembled.out, "per-atom assembly"));
    CHECK(contains(assembled.out, "weight 3, 2 forests"));

    CliResult descended = run({"descend", "--fixture", "tied_trees", "-k", "3"});
    CHECK(descended.code == 0);
    CHECK(contains(descended.out, "labeled-atom replacement"));
    CHECK(contains(descended.out, "weight 3, 2 forests"));

    // equality gap: fall back to the enumeration with a note
    CliResult fallback = run({"assemble", "--fixture", "equal_gap", "-k", "2"});
    CHECK(fallback.code == 0);
    CHECK(contains(fallback.out, "not strict"));
    CHECK(contains(fallback.out, "enumeration"));

    CliResult machine = run({"descend", "--fixture", "equal_gap", "-k", "2", "--format", "machine"});
    CHECK(machine.code == 0);
    CHECK(contains(machine.out, "\"construction_applies\": false"));
}

TEST_CASE("verify exits zero only when every check holds") {
    CliResult quick =
        run({"verify", "--fixtures-only", "--format", "machine"});
    CHECK(quick.code == 0);
    CHECK(contains(quick.out, "\"result\": \"pass\""));

    CliResult tiny = run({"verify", "--instances", "3", "--max-n", "4", "--seed", "5"});
    CHECK(tiny.code == 0);
    CHECK(contains(tiny.out, "result: PASS"));
}

TEST_CASE("identical seeds give byte-identical machine reports") {
    std::vector<std::string> args = {"verify",  "--seed",   "11",     "--instances",
                                     "6",       "--max-n",  "4",      "--samples",
                                     "5",       "--format", "machine"};
    CliResult first = run(args);
    CliResult second = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
}

TEST_CASE("markov prints the exponent table beside the minima") {
    CliResult r = run({"markov", "--fixture", "unique_minima", "--epsilon", "0.02"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "epsilon 0.02"));
    CHECK(contains(r.out, "7.000000000"));  // the lone spanning tree pins the exponent
    CHECK(contains(r.out, "max relative deviation"));

    CliResult bad = run({"markov", "--fixture", "unique_minima", "--epsilon", "-1"});
    CHECK(bad.code == 1);
}

TEST_CASE("dot renders the graph and per-forest clusters") {
    CliResult plain = run({"dot", "--fixture", "unique_minima"});
    CHECK(plain.code == 0);
    CHECK(contains(plain.out, "digraph"));
    CHECK(contains(plain.out, "\"a\" -> \"c\""));

    CliResult forests = run({"dot", "--fixture", "unique_minima", "-k", "3"});
    CHECK(forests.code == 0);
    CHECK(contains(forests.out, "cluster_0"));
    CHECK(contains(forests.out, "doublecircle"));
}

TEST_CASE("fixtures are listed and printable") {
    CliResult list = run({"fixtures"});
    CHECK(list.code == 0);
    CHECK(contains(list.out, "unique_minima"));
    CHECK(contains(list.out, "tied_levels"));

    CliResult show = run({"fixtures", "--show", "unique_minima"});
    CHECK(show.code == 0);
    CHECK(contains(show.out, "vertices a b c d"));

    CliResult missing = run({"fixtures", "--show", "nope"});
    CHECK(missing.code == 1);
}

TEST_CASE("usage errors are reported without crashing") {
    CHECK(run({}).code != 0);
    CHECK(run({"no_such_command"}).code != 0);
    CHECK(run({"analyze"}).code == 1);  // no graph given
    CHECK(run({"analyze", "--fixture", "nope"}).code == 1);
    CHECK(run({"analyze", "/nonexistent.graph"}).code == 1);
    CHECK(run({"assemble", "--fixture", "unique_minima"}).code != 0);  // -k is required
    CHECK(run({"--help"}).code == 0);
}
