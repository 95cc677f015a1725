#include "minforest/oracle.hpp"

#include <algorithm>

#include "minforest/errors.hpp"

namespace minforest {

namespace {

void require_level(const WeightedDigraph& graph, int k) {
    if (k < 1 || k > graph.vertex_count())
        throw DomainError("tree count k must lie in 1..N");
}

void require_size(const WeightedDigraph& graph, int max_vertices) {
    if (graph.vertex_count() > max_vertices)
        throw ResourceError("graph too large for exhaustive enumeration (limit " +
                            std::to_string(max_vertices) + ")");
}

}  // namespace

/// Depth-first sweep over all out-arc maps. Vertices pick their out-arc in
/// index order, "no arc" first, targets ascending; complete maps therefore
/// arrive in lexicographic order and families collected along the way are
/// already sorted and duplicate-free.
class ForestSweep {
  public:
    explicit ForestSweep(const WeightedDigraph& graph)
        : graph_(&graph),
          out_(static_cast<std::size_t>(graph.vertex_count()), SpanningForest::kNoArc) {}

    /// visit(out_map, arc_count, weight) for every complete acyclic map with
    /// arc_count in [min_arcs, max_arcs].
    template <typename Visit>
    void run(int min_arcs, int max_arcs, Visit&& visit) {
        min_arcs_ = min_arcs;
        max_arcs_ = max_arcs;
        step(0, 0, Rational(), visit);
    }

    SpanningForest snapshot() const {
        return SpanningForest(SpanningForest::Unchecked{}, *graph_, out_);
    }

  private:
    bool would_cycle(int from, int to) const {
        int v = to;
        while (v != SpanningForest::kNoArc) {
            if (v == from) return true;
            v = out_[static_cast<std::size_t>(v)];
        }
        return false;
    }

    template <typename Visit>
    void step(int v, int arcs, Rational weight, Visit&& visit) {
        const int n = graph_->vertex_count();
        if (arcs > max_arcs_ || arcs + (n - v) < min_arcs_) return;
        if (v == n) {
            if (arcs >= min_arcs_) visit(out_, arcs, weight);
            return;
        }
        step(v + 1, arcs, weight, visit);
        for (int w : graph_->out_targets(v)) {
            if (would_cycle(v, w)) continue;
            out_[static_cast<std::size_t>(v)] = w;
            step(v + 1, arcs + 1, weight + graph_->weight(v, w), visit);
            out_[static_cast<std::size_t>(v)] = SpanningForest::kNoArc;
        }
    }

    const WeightedDigraph* graph_;
    std::vector<int> out_;
    int min_arcs_ = 0;
    int max_arcs_ = 0;
};

ConvexitySign WeightProfile::sign_at(int k) const {
    if (k < 1 || k > n() - 1) throw DomainError("sign_at: k must lie in 1..N-1");
    return sign[static_cast<std::size_t>(k)];
}

bool WeightProfile::strict_at(int k) const {
    if (k < 1 || k > n()) throw DomainError("strict_at: k must lie in 1..N");
    if (k == n()) return true;
    return sign_at(k) == ConvexitySign::Strict;
}

const MinimalForestFamily& ForestAtlas::family(int k) const {
    if (k < 1 || k > graph->vertex_count()) throw DomainError("family: k must lie in 1..N");
    return minimal[static_cast<std::size_t>(k)];
}

ForestAtlas enumerate_atlas(const WeightedDigraph& graph, int max_vertices) {
    require_size(graph, max_vertices);
    const int n = graph.vertex_count();
    ForestAtlas atlas;
    atlas.graph = &graph;
    atlas.minimal.resize(static_cast<std::size_t>(n) + 1);
    atlas.forest_count.assign(static_cast<std::size_t>(n) + 1, 0);
    atlas.histogram.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) atlas.minimal[static_cast<std::size_t>(k)].k = k;

    ForestSweep sweep(graph);
    sweep.run(0, n, [&](const std::vector<int>& out, int arcs, const Rational& weight) {
        (void)out;
        auto k = static_cast<std::size_t>(n - arcs);
        atlas.forest_count[k] += 1;
        atlas.histogram[k][weight] += 1;
        MinimalForestFamily& fam = atlas.minimal[k];
        ExtRational w{weight};
        if (w < fam.weight) {
            fam.weight = w;
            fam.forests.clear();
        }
        if (w == fam.weight) {
            if (static_cast<long long>(fam.forests.size()) >= kFamilyCap)
                throw ResourceError("minimal family exceeds the materialization cap");
            fam.forests.push_back(sweep.snapshot());
        }
    });

    WeightProfile& profile = atlas.profile;
    profile.min_weight.resize(static_cast<std::size_t>(n) + 1, ExtRational::infinity());
    for (int k = 1; k <= n; ++k)
        profile.min_weight[static_cast<std::size_t>(k)] = atlas.minimal[static_cast<std::size_t>(k)].weight;
    profile.sign.assign(static_cast<std::size_t>(std::max(n, 1)), ConvexitySign::Undefined);
    for (int k = 1; k <= n - 1; ++k) {
        const ExtRational& lo = profile.min_weight[static_cast<std::size_t>(k - 1)];
        const ExtRational& mid = profile.min_weight[static_cast<std::size_t>(k)];
        const ExtRational& hi = profile.min_weight[static_cast<std::size_t>(k + 1)];
        ConvexitySign s;
        if (!mid.is_finite()) {
            s = ConvexitySign::Undefined;
        } else if (!lo.is_finite()) {
            s = ConvexitySign::Strict;
        } else {
            ExtRational left = lo - mid;
            ExtRational right = mid - hi;
            if (left > right)
                s = ConvexitySign::Strict;
            else if (left == right)
                s = ConvexitySign::Equal;
            else
                throw std::logic_error("convexity violated by the enumeration sweep");
        }
        profile.sign[static_cast<std::size_t>(k)] = s;
    }
    return atlas;
}

std::vector<SpanningForest> enumerate_forests(const WeightedDigraph& graph, int k,
                                              int max_vertices) {
    require_level(graph, k);
    require_size(graph, max_vertices);
    const int n = graph.vertex_count();
    std::vector<SpanningForest> out;
    ForestSweep sweep(graph);
    sweep.run(n - k, n - k, [&](const std::vector<int>&, int, const Rational&) {
        if (static_cast<long long>(out.size()) >= kFamilyCap)
            throw ResourceError("forest family exceeds the materialization cap");
        out.push_back(sweep.snapshot());
    });
    return out;
}

MinimalForestFamily minimal_forests(const WeightedDigraph& graph, int k, int max_vertices) {
    require_level(graph, k);
    require_size(graph, max_vertices);
    const int n = graph.vertex_count();
    MinimalForestFamily fam;
    fam.k = k;
    ForestSweep sweep(graph);
    sweep.run(n - k, n - k, [&](const std::vector<int>&, int, const Rational& weight) {
        ExtRational w{weight};
        if (w < fam.weight) {
            fam.weight = w;
            fam.forests.clear();
        }
        if (w == fam.weight) {
            if (static_cast<long long>(fam.forests.size()) >= kFamilyCap)
                throw ResourceError("minimal family exceeds the materialization cap");
            fam.forests.push_back(sweep.snapshot());
        }
    });
    return fam;
}

WeightProfile weight_profile(const WeightedDigraph& graph, int max_vertices) {
    return enumerate_atlas(graph, max_vertices).profile;
}

namespace {

const MinimalForestFamily& checked_family(const ForestAtlas& atlas, const SpanningForest& f,
                                          const char* what) {
    const MinimalForestFamily& fam = atlas.family(f.tree_count());
    if (!std::binary_search(fam.forests.begin(), fam.forests.end(), f))
        throw DomainError(std::string(what) + ": forest is not in the minimal family of its level");
    return fam;
}

}  // namespace

std::vector<SpanningForest> ancestors_of(const ForestAtlas& atlas, const SpanningForest& r) {
    checked_family(atlas, r, "ancestors_of");
    int k = r.tree_count();
    if (k >= atlas.graph->vertex_count())
        throw DomainError("ancestors_of: the full-level forest has no ancestors");
    std::vector<SpanningForest> out;
    for (const SpanningForest& f : atlas.family(k + 1).forests)
        if (is_descendant(f, r)) out.push_back(f);
    return out;
}

std::vector<SpanningForest> descendants_of(const ForestAtlas& atlas, const SpanningForest& f) {
    checked_family(atlas, f, "descendants_of");
    int k = f.tree_count();
    if (k <= 1) throw DomainError("descendants_of: single-tree forests have no descendants");
    std::vector<SpanningForest> out;
    for (const SpanningForest& r : atlas.family(k - 1).forests)
        if (is_descendant(f, r)) out.push_back(r);
    return out;
}

}  // namespace minforest
