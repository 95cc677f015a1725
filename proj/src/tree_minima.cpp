#include "minforest/tree_minima.hpp"

#include <algorithm>

#include "minforest/errors.hpp"

namespace minforest {

namespace {

void require_enumerable(const WeightedDigraph& graph, VertexSet d, int max_vertices,
                        const char* what) {
    graph.require_subset(d, what);
    if (d.empty()) throw DomainError(std::string(what) + ": empty subset");
    if (graph.vertex_count() > max_vertices)
        throw ResourceError(std::string(what) + ": graph too large for exhaustive enumeration");
}

/// Backtracks over out-arc choices for `verts`; choices[i] lists vertex
/// verts[i]'s admissible targets, plus "no arc" when optional[i] is set.
/// Emits every acyclic assignment.
template <typename Visit>
void enumerate_assignments(const std::vector<int>& verts,
                           const std::vector<std::vector<int>>& choices,
                           const std::vector<bool>& optional, int ambient_n, Visit&& visit) {
    std::vector<int> out(static_cast<std::size_t>(ambient_n), SpanningForest::kNoArc);
    auto would_cycle = [&](int from, int to) {
        int v = to;
        while (v != SpanningForest::kNoArc) {
            if (v == from) return true;
            v = out[static_cast<std::size_t>(v)];
        }
        return false;
    };
    auto step = [&](auto&& self, std::size_t i) -> void {
        if (i == verts.size()) {
            visit(out);
            return;
        }
        int v = verts[i];
        if (optional[i]) self(self, i + 1);
        for (int w : choices[i]) {
            if (would_cycle(v, w)) continue;
            out[static_cast<std::size_t>(v)] = w;
            self(self, i + 1);
            out[static_cast<std::size_t>(v)] = SpanningForest::kNoArc;
        }
    };
    step(step, 0);
}

void keep_minimum(TreeMinimumSet& set, const Rational& weight, SubForest tree) {
    ExtRational w{weight};
    if (w < set.weight) {
        set.weight = w;
        set.trees.clear();
    }
    if (w == set.weight) {
        if (static_cast<long long>(set.trees.size()) >= kFamilyCap)
            throw ResourceError("minimizer set exceeds the materialization cap");
        set.trees.push_back(std::move(tree));
    }
}

SubForest tree_from_out(const WeightedDigraph& graph, VertexSet verts,
                        const std::vector<int>& out) {
    std::vector<std::pair<int, int>> arcs;
    for (int v : verts.elements())
        if (out[static_cast<std::size_t>(v)] != SpanningForest::kNoArc)
            arcs.emplace_back(v, out[static_cast<std::size_t>(v)]);
    return SubForest(graph, verts, std::move(arcs));
}

}  // namespace

TreeMinimaRecord rooted_tree_minima(const WeightedDigraph& graph, VertexSet d, int max_vertices) {
    require_enumerable(graph, d, max_vertices, "rooted_tree_minima");
    TreeMinimaRecord rec;
    rec.subset = d;
    const std::vector<int> members = d.elements();
    for (int q : members) {
        // Every vertex of D except q must pick an out-arc staying inside D;
        // acyclicity then forces a single tree rooted at q.
        std::vector<int> verts;
        std::vector<std::vector<int>> choices;
        std::vector<bool> optional;
        bool feasible = true;
        for (int v : members) {
            if (v == q) continue;
            std::vector<int> targets;
            for (int w : graph.out_targets(v))
                if (d.contains(w)) targets.push_back(w);
            if (targets.empty()) {
                feasible = false;
                break;
            }
            verts.push_back(v);
            choices.push_back(std::move(targets));
            optional.push_back(false);
        }
        TreeMinimumSet best;
        if (feasible) {
            enumerate_assignments(verts, choices, optional, graph.vertex_count(),
                                  [&](const std::vector<int>& out) {
                                      SubForest tree = tree_from_out(graph, d, out);
                                      Rational w = tree.weight();
                                      keep_minimum(best, w, std::move(tree));
                                  });
        }
        std::sort(best.trees.begin(), best.trees.end());
        rec.per_root.emplace_back(q, std::move(best));
    }
    for (const auto& [q, set] : rec.per_root) {
        (void)q;
        if (set.weight < rec.rooted.weight) rec.rooted = TreeMinimumSet{set.weight, {}};
        if (set.weight == rec.rooted.weight && set.weight.is_finite())
            rec.rooted.trees.insert(rec.rooted.trees.end(), set.trees.begin(), set.trees.end());
    }
    std::sort(rec.rooted.trees.begin(), rec.rooted.trees.end());
    return rec;
}

TreeMinimumSet exit_tree_minima(const WeightedDigraph& graph, VertexSet d, int max_vertices) {
    require_enumerable(graph, d, max_vertices, "exit_tree_minima");
    if (d == graph.vertices())
        throw DomainError("exit_tree_minima: the subset must leave room for an exit vertex");
    TreeMinimumSet best;
    const std::vector<int> members = d.elements();
    for (int r : d.complement(graph.vertex_count()).elements()) {
        VertexSet extended = d;
        extended.add(r);
        std::vector<int> verts;
        std::vector<std::vector<int>> choices;
        std::vector<bool> optional;
        bool feasible = true;
        for (int v : members) {
            std::vector<int> targets;
            for (int w : graph.out_targets(v))
                if (extended.contains(w)) targets.push_back(w);
            if (targets.empty()) {
                feasible = false;
                break;
            }
            verts.push_back(v);
            choices.push_back(std::move(targets));
            optional.push_back(false);
        }
        if (!feasible) continue;
        enumerate_assignments(verts, choices, optional, graph.vertex_count(),
                              [&](const std::vector<int>& out) {
                                  // The induced graph on D stays a tree only
                                  // when exactly one arc crosses over to r.
                                  int entering = 0;
                                  for (int v : members)
                                      entering += (out[static_cast<std::size_t>(v)] == r);
                                  if (entering != 1) return;
                                  SubForest tree = tree_from_out(graph, extended, out);
                                  Rational w = tree.weight();
                                  keep_minimum(best, w, std::move(tree));
                              });
    }
    std::sort(best.trees.begin(), best.trees.end());
    return best;
}

ExtRational exit_tree_weight_formula(const WeightedDigraph& graph, VertexSet d, int max_vertices) {
    require_enumerable(graph, d, max_vertices, "exit_tree_weight_formula");
    if (d == graph.vertices())
        throw DomainError("exit_tree_weight_formula: the subset must leave room for an exit vertex");
    TreeMinimaRecord rec = rooted_tree_minima(graph, d, max_vertices);
    ExtRational best = ExtRational::infinity();
    for (const auto& [q, set] : rec.per_root) {
        if (!set.weight.is_finite()) continue;
        ExtRational exit = ExtRational::infinity();
        for (int w : graph.out_targets(q)) {
            if (d.contains(w)) continue;
            ExtRational cand{graph.weight(q, w)};
            if (cand < exit) exit = cand;
        }
        ExtRational total = set.weight + exit;
        if (total < best) best = total;
    }
    return best;
}

}  // namespace minforest
