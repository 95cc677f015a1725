#pragma once

#include <string>
#include <utility>
#include <vector>

#include "minforest/forest.hpp"

namespace minforest::testutil {

inline SpanningForest make_forest(const WeightedDigraph& g,
                                  const std::vector<std::pair<std::string, std::string>>& arcs) {
    std::vector<int> out(static_cast<std::size_t>(g.vertex_count()), SpanningForest::kNoArc);
    for (const auto& [from, to] : arcs)
        out[static_cast<std::size_t>(g.index_of(from))] = g.index_of(to);
    return SpanningForest(g, std::move(out));
}

inline VertexSet named_set(const WeightedDigraph& g, const std::vector<std::string>& names) {
    VertexSet d;
    for (const std::string& n : names) d.add(g.index_of(n));
    return d;
}

inline SubForest make_sub(const WeightedDigraph& g, const std::vector<std::string>& vertices,
                          const std::vector<std::pair<std::string, std::string>>& arcs) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(arcs.size());
    for (const auto& [from, to] : arcs) pairs.emplace_back(g.index_of(from), g.index_of(to));
    return SubForest(g, named_set(g, vertices), std::move(pairs));
}

}  // namespace minforest::testutil
