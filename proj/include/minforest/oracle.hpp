#pragma once

#include <map>
#include <vector>

#include "minforest/forest.hpp"

namespace minforest {

/// Guard for the exponential sweeps; (max out-degree + 1)^N candidates in the
/// worst case, so the default keeps runs interactive.
inline constexpr int kDefaultEnumerationLimit = 12;
/// Hard cap on any materialized forest/tree collection.
inline constexpr long long kFamilyCap = 1'000'000;

enum class ConvexitySign { Strict, Equal, Undefined };

/// Minimum spanning-forest weights by tree count, with the gap comparisons
/// between consecutive levels. min_weight[k] is infinite exactly when no
/// k-forest exists; the minimum is 0 at k = N and infinite at k = 0.
struct WeightProfile {
    std::vector<ExtRational> min_weight;  // index 0..N
    std::vector<ConvexitySign> sign;      // index 1..N-1; [0] unused

    int n() const { return static_cast<int>(min_weight.size()) - 1; }
    ConvexitySign sign_at(int k) const;
    /// Strict sign at k; k = N counts as strict (min_weight[N+1] taken as
    /// infinite, matching the level where only the empty forest remains).
    bool strict_at(int k) const;
    bool equal_at(int k) const { return sign_at(k) == ConvexitySign::Equal; }
};

/// All minimum-weight k-tree spanning forests; weight is infinite and the
/// list empty when none exist.
struct MinimalForestFamily {
    int k = 0;
    ExtRational weight = ExtRational::infinity();
    std::vector<SpanningForest> forests;  // sorted, deduplicated
};

/// One full enumeration sweep: per-level counts, weight histograms, minimal
/// families and the weight profile.
struct ForestAtlas {
    const WeightedDigraph* graph = nullptr;
    WeightProfile profile;
    std::vector<MinimalForestFamily> minimal;             // index k = 0..N
    std::vector<long long> forest_count;                  // |F^k|
    std::vector<std::map<Rational, long long>> histogram; // weight -> multiplicity per k

    const MinimalForestFamily& family(int k) const;
    bool level_nonempty(int k) const { return forest_count[static_cast<std::size_t>(k)] > 0; }
};

ForestAtlas enumerate_atlas(const WeightedDigraph& graph,
                            int max_vertices = kDefaultEnumerationLimit);

/// Every spanning forest with exactly k trees, sorted.
std::vector<SpanningForest> enumerate_forests(const WeightedDigraph& graph, int k,
                                              int max_vertices = kDefaultEnumerationLimit);

MinimalForestFamily minimal_forests(const WeightedDigraph& graph, int k,
                                    int max_vertices = kDefaultEnumerationLimit);

WeightProfile weight_profile(const WeightedDigraph& graph,
                             int max_vertices = kDefaultEnumerationLimit);

/// Members of the minimal (k+1)-family one hang-step above R (R must be a
/// minimal k-forest of the atlas' graph).
std::vector<SpanningForest> ancestors_of(const ForestAtlas& atlas, const SpanningForest& r);
/// Members of the minimal (k-1)-family one hang-step below F.
std::vector<SpanningForest> descendants_of(const ForestAtlas& atlas, const SpanningForest& f);

}  // namespace minforest
