#include "minforest/fixtures.hpp"

#include "minforest/errors.hpp"
#include "minforest/graph_io.hpp"

namespace minforest {

namespace {

constexpr const char* kUniqueMinima =
    "# chain a->c->b with a side exit b->d; every level has a unique minimum\n"
    "vertices a b c d\n"
    "arc a c 2\n"
    "arc b a 1\n"
    "arc b d 2\n"
    "arc c b 3\n";

constexpr const char* kTiedTrees =
    "# 2-cycle J<->L' fed by L and I; three tied spanning trees\n"
    "vertices J I L L'\n"
    "arc J I 3\n"
    "arc J L' 2\n"
    "arc I L 3\n"
    "arc L L' 1\n"
    "arc L' J 2\n";

constexpr const char* kStrictGaps =
    "# 2-cycle J<->L' fed by L and I; strict gap signs at every level\n"
    "vertices J I L L'\n"
    "arc J L' 2\n"
    "arc I L 3\n"
    "arc L L' 1\n"
    "arc L' J 2\n";

constexpr const char* kEqualGap =
    "# path I->L->L'->J; the middle gap sign degenerates to equality\n"
    "vertices J I L L'\n"
    "arc I L 2\n"
    "arc L L' 1\n"
    "arc L' J 2\n";

constexpr const char* kMissingExit =
    "# 2-cycle Z<->L plus Z->J and I->J; equality level where one minimal\n"
    "# restriction set is a proper subset of the exit-tree minimizers\n"
    "vertices Z L J I\n"
    "arc Z L 2\n"
    "arc Z J 2\n"
    "arc L Z 2\n"
    "arc I J 1\n";

constexpr const char* kTiedLevels =
    "# 2-cycles J<->L' and L<->L' with a feeder I; tied minima on every level\n"
    "vertices J I L L'\n"
    "arc J L' 2\n"
    "arc I L 2\n"
    "arc L L' 1\n"
    "arc L' J 2\n"
    "arc L' L 1\n";

}  // namespace

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = {
        {"unique_minima", kUniqueMinima}, {"tied_trees", kTiedTrees},   {"strict_gaps", kStrictGaps},
        {"equal_gap", kEqualGap},       {"missing_exit", kMissingExit},   {"tied_levels", kTiedLevels},
    };
    return all;
}

WeightedDigraph fixture_graph(const std::string& name) {
    for (const Fixture& f : fixtures())
        if (name == f.name) return parse_graph(f.document);
    throw DomainError("unknown fixture: " + name);
}

}  // namespace minforest
