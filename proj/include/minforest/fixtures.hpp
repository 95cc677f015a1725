#pragma once

#include <string>
#include <vector>

#include "minforest/digraph.hpp"

namespace minforest {

/// Graphs shipped with the repository, embedded so library users and tests
/// need no file paths. The copies under fixtures/ hold identical documents.
struct Fixture {
    const char* name;
    const char* document;
};

const std::vector<Fixture>& fixtures();

/// Parsed fixture by name; domain error for unknown names.
WeightedDigraph fixture_graph(const std::string& name);

}  // namespace minforest
