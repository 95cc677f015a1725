#pragma once

#include <utility>
#include <vector>

#include "minforest/digraph.hpp"

namespace minforest {

/// Spanning in-forest: every vertex keeps at most one outgoing arc of the
/// graph and no cycle closes. Stored as the out-arc map, which is also the
/// identity used for comparisons and deduplication.
class SpanningForest {
  public:
    static constexpr int kNoArc = -1;

    /// Validates arc existence and acyclicity; throws DomainError.
    SpanningForest(const WeightedDigraph& graph, std::vector<int> out_map);

    /// All vertices rootless (the N-tree forest).
    static SpanningForest empty(const WeightedDigraph& graph);

    const WeightedDigraph& graph() const { return *graph_; }
    const std::vector<int>& out_map() const { return out_; }
    /// Target of v's out-arc, or kNoArc.
    int out(int v) const { return out_[static_cast<std::size_t>(v)]; }
    bool has_out(int v) const { return out(v) != kNoArc; }

    int arc_count() const;
    int tree_count() const { return graph_->vertex_count() - arc_count(); }
    VertexSet roots() const;
    /// Root of the tree containing v.
    int root_of(int v) const;

    bool operator==(const SpanningForest& o) const { return out_ == o.out_; }
    bool operator<(const SpanningForest& o) const { return out_ < o.out_; }

  private:
    struct Unchecked {};
    SpanningForest(Unchecked, const WeightedDigraph& graph, std::vector<int> out_map)
        : graph_(&graph), out_(std::move(out_map)) {}
    friend class ForestSweep;

    const WeightedDigraph* graph_;
    std::vector<int> out_;
};

/// Forest on a subset of the ambient graph's vertices. Arcs are (from, to)
/// pairs sorted ascending; equality compares the vertex set and the arcs, so
/// restrictions with different reach never collide.
class SubForest {
  public:
    SubForest(const WeightedDigraph& graph, VertexSet vertex_set,
              std::vector<std::pair<int, int>> arcs);

    const WeightedDigraph& graph() const { return *graph_; }
    VertexSet vertex_set() const { return vertex_set_; }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    /// Target of v's out-arc inside this subforest, or SpanningForest::kNoArc.
    int out(int v) const;
    /// Sum of arc weights.
    Rational weight() const;
    /// Exactly one component.
    bool is_tree() const { return arc_count() == vertex_set_.count() - 1; }
    /// The unique out-arc-free vertex of a tree subforest.
    int tree_root() const;

    bool operator==(const SubForest& o) const {
        return vertex_set_ == o.vertex_set_ && arcs_ == o.arcs_;
    }
    bool operator<(const SubForest& o) const {
        if (!(vertex_set_ == o.vertex_set_)) return vertex_set_ < o.vertex_set_;
        return arcs_ < o.arcs_;
    }

  private:
    const WeightedDigraph* graph_;
    VertexSet vertex_set_;
    std::vector<std::pair<int, int>> arcs_;
};

/// Weight landing on D: the total weight of arcs whose tail lies in D.
Rational weight_on(const SpanningForest& f, VertexSet d);
Rational weight_on(const SubForest& g, VertexSet d);
Rational total_weight(const SpanningForest& f);

/// Arcs with both endpoints in D, on vertex set D.
SubForest restriction(const SpanningForest& f, VertexSet d);
SubForest restriction(const SubForest& g, VertexSet d);

/// All arcs leaving D's vertices; the vertex set grows by the heads that land
/// outside D.
SubForest outgoing_restriction(const SpanningForest& f, VertexSet d);
SubForest outgoing_restriction(const SubForest& g, VertexSet d);

/// Heads of arcs from D ending outside D.
VertexSet out_neighborhood(const SpanningForest& f, VertexSet d);
VertexSet out_neighborhood(const SubForest& g, VertexSet d);
VertexSet out_neighborhood(const std::vector<SpanningForest>& family, VertexSet d);
/// Tails of arcs from outside D ending in D.
VertexSet in_neighborhood(const SpanningForest& f, VertexSet d);
VertexSet in_neighborhood(const SubForest& g, VertexSet d);
VertexSet in_neighborhood(const std::vector<SpanningForest>& family, VertexSet d);

/// Out-arc map after swapping D's arcs, before any forest guarantee.
struct CandidateGraph {
    const WeightedDigraph* graph;
    std::vector<int> out;
    bool is_forest;   // acyclic; out-degree <= 1 holds by construction
    int tree_count;   // meaningful only when is_forest

    /// Throws DomainError when the candidate closed a cycle.
    SpanningForest forest() const;
};

/// F's out-arcs everywhere except on D, where G's take over (absence included).
CandidateGraph arc_replace(const SpanningForest& f, const SpanningForest& g, VertexSet d);
CandidateGraph arc_replace(const SpanningForest& f, const SubForest& g, VertexSet d);

struct TreeComponent {
    int root;
    VertexSet vertices;
};

/// Components with their roots, ascending by root index.
std::vector<TreeComponent> trees_and_roots(const SpanningForest& f);

/// Whether `descendant` arises from `ancestor` by hanging exactly one of its
/// trees (rooted at some y) somewhere into the tree of another root x while
/// leaving every other tree untouched. `ancestor` must have one tree more.
bool is_descendant(const SpanningForest& ancestor, const SpanningForest& descendant);

}  // namespace minforest
