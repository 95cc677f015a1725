#pragma once

#include <vector>

#include "minforest/forest.hpp"
#include "minforest/oracle.hpp"

namespace minforest {

/// A minimum together with every tree achieving it. Weight is infinite and
/// the list empty when the candidate set is empty.
struct TreeMinimumSet {
    ExtRational weight = ExtRational::infinity();
    std::vector<SubForest> trees;  // sorted, deduplicated
};

/// Minima over the in-trees spanning a subset D, overall and per root.
struct TreeMinimaRecord {
    VertexSet subset;
    std::vector<std::pair<int, TreeMinimumSet>> per_root;  // one entry per vertex of D
    TreeMinimumSet rooted;                                 // best over all roots
};

/// Enumerates the in-trees on D (arcs inside D, every non-root vertex keeps
/// exactly one out-arc), bucketed by root.
TreeMinimaRecord rooted_tree_minima(const WeightedDigraph& graph, VertexSet d,
                                    int max_vertices = kDefaultEnumerationLimit);

/// Minimum over trees that span D and leave it once: vertex set D plus one
/// outside vertex r, every vertex of D keeps an out-arc, the induced graph on
/// D stays a tree (so the single exit arc starts at its root and ends in r).
/// D must be a proper subset.
TreeMinimumSet exit_tree_minima(const WeightedDigraph& graph, VertexSet d,
                                int max_vertices = kDefaultEnumerationLimit);

/// Same minimum by decomposition: over roots q of D, the best q-rooted
/// spanning tree of D plus q's cheapest arc out of D.
ExtRational exit_tree_weight_formula(const WeightedDigraph& graph, VertexSet d,
                                     int max_vertices = kDefaultEnumerationLimit);

}  // namespace minforest
