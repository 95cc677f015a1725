#include "minforest/forest.hpp"

#include <algorithm>

#include "minforest/errors.hpp"

namespace minforest {

namespace {

void require_same_graph(const WeightedDigraph* a, const WeightedDigraph* b, const char* what) {
    if (a != b) throw DomainError(std::string(what) + ": operands live on different graphs");
}

/// Walks an out-arc map; returns true when a cycle is reachable from start.
bool closes_cycle(const std::vector<int>& out, int start) {
    int steps = 0;
    int v = start;
    while (v != SpanningForest::kNoArc) {
        v = out[static_cast<std::size_t>(v)];
        if (++steps > static_cast<int>(out.size())) return true;
    }
    return false;
}

}  // namespace

SpanningForest::SpanningForest(const WeightedDigraph& graph, std::vector<int> out_map)
    : graph_(&graph), out_(std::move(out_map)) {
    const int n = graph.vertex_count();
    if (static_cast<int>(out_.size()) != n)
        throw DomainError("out-arc map size does not match the graph");
    for (int v = 0; v < n; ++v) {
        int w = out(v);
        if (w == kNoArc) continue;
        if (w < 0 || w >= n || !graph.has_arc(v, w))
            throw DomainError("out-arc map uses an arc missing from the graph");
    }
    for (int v = 0; v < n; ++v)
        if (closes_cycle(out_, v)) throw DomainError("out-arc map closes a cycle");
}

SpanningForest SpanningForest::empty(const WeightedDigraph& graph) {
    return SpanningForest(graph, std::vector<int>(static_cast<std::size_t>(graph.vertex_count()), kNoArc));
}

int SpanningForest::arc_count() const {
    int c = 0;
    for (int t : out_) c += (t != kNoArc);
    return c;
}

VertexSet SpanningForest::roots() const {
    VertexSet r;
    for (int v = 0; v < graph_->vertex_count(); ++v)
        if (!has_out(v)) r.add(v);
    return r;
}

int SpanningForest::root_of(int v) const {
    while (has_out(v)) v = out(v);
    return v;
}

SubForest::SubForest(const WeightedDigraph& graph, VertexSet vertex_set,
                     std::vector<std::pair<int, int>> arcs)
    : graph_(&graph), vertex_set_(vertex_set), arcs_(std::move(arcs)) {
    graph.require_subset(vertex_set_, "subforest");
    if (vertex_set_.empty()) throw DomainError("subforest needs a nonempty vertex set");
    std::sort(arcs_.begin(), arcs_.end());
    std::vector<int> out(static_cast<std::size_t>(graph.vertex_count()), SpanningForest::kNoArc);
    for (auto [from, to] : arcs_) {
        if (!vertex_set_.contains(from) || !vertex_set_.contains(to))
            throw DomainError("subforest arc endpoint outside its vertex set");
        if (!graph.has_arc(from, to)) throw DomainError("subforest arc missing from the graph");
        if (out[static_cast<std::size_t>(from)] != SpanningForest::kNoArc)
            throw DomainError("subforest vertex with two outgoing arcs");
        out[static_cast<std::size_t>(from)] = to;
    }
    for (int v : vertex_set_.elements())
        if (closes_cycle(out, v)) throw DomainError("subforest closes a cycle");
}

int SubForest::out(int v) const {
    for (auto [from, to] : arcs_)
        if (from == v) return to;
    return SpanningForest::kNoArc;
}

Rational SubForest::weight() const {
    Rational total;
    for (auto [from, to] : arcs_) total += graph_->weight(from, to);
    return total;
}

int SubForest::tree_root() const {
    if (!is_tree()) throw DomainError("subforest is not a single tree");
    VertexSet tails;
    for (auto [from, to] : arcs_) {
        (void)to;
        tails.add(from);
    }
    return vertex_set_.minus(tails).elements().front();
}

Rational weight_on(const SpanningForest& f, VertexSet d) {
    f.graph().require_subset(d, "weight_on");
    Rational total;
    for (int v : d.elements())
        if (f.has_out(v)) total += f.graph().weight(v, f.out(v));
    return total;
}

Rational weight_on(const SubForest& g, VertexSet d) {
    g.graph().require_subset(d, "weight_on");
    Rational total;
    for (auto [from, to] : g.arcs())
        if (d.contains(from)) total += g.graph().weight(from, to);
    return total;
}

Rational total_weight(const SpanningForest& f) { return weight_on(f, f.graph().vertices()); }

namespace {

template <typename ArcFn>
SubForest restriction_impl(const WeightedDigraph& graph, VertexSet domain, VertexSet d,
                           ArcFn&& each_arc) {
    graph.require_subset(d, "restriction");
    if (d.empty()) throw DomainError("restriction: empty subset");
    if (!d.subset_of(domain)) throw DomainError("restriction: subset leaves the forest's vertices");
    std::vector<std::pair<int, int>> arcs;
    each_arc([&](int from, int to) {
        if (d.contains(from) && d.contains(to)) arcs.emplace_back(from, to);
    });
    return SubForest(graph, d, std::move(arcs));
}

template <typename ArcFn>
SubForest outgoing_impl(const WeightedDigraph& graph, VertexSet domain, VertexSet d,
                        ArcFn&& each_arc) {
    graph.require_subset(d, "outgoing_restriction");
    if (d.empty()) throw DomainError("outgoing_restriction: empty subset");
    if (!d.subset_of(domain))
        throw DomainError("outgoing_restriction: subset leaves the forest's vertices");
    std::vector<std::pair<int, int>> arcs;
    VertexSet verts = d;
    each_arc([&](int from, int to) {
        if (d.contains(from)) {
            arcs.emplace_back(from, to);
            verts.add(to);
        }
    });
    return SubForest(graph, verts, std::move(arcs));
}

}  // namespace

SubForest restriction(const SpanningForest& f, VertexSet d) {
    return restriction_impl(f.graph(), f.graph().vertices(), d, [&](auto&& fn) {
        for (int v = 0; v < f.graph().vertex_count(); ++v)
            if (f.has_out(v)) fn(v, f.out(v));
    });
}

SubForest restriction(const SubForest& g, VertexSet d) {
    return restriction_impl(g.graph(), g.vertex_set(), d, [&](auto&& fn) {
        for (auto [from, to] : g.arcs()) fn(from, to);
    });
}

SubForest outgoing_restriction(const SpanningForest& f, VertexSet d) {
    return outgoing_impl(f.graph(), f.graph().vertices(), d, [&](auto&& fn) {
        for (int v = 0; v < f.graph().vertex_count(); ++v)
            if (f.has_out(v)) fn(v, f.out(v));
    });
}

SubForest outgoing_restriction(const SubForest& g, VertexSet d) {
    return outgoing_impl(g.graph(), g.vertex_set(), d, [&](auto&& fn) {
        for (auto [from, to] : g.arcs()) fn(from, to);
    });
}

VertexSet out_neighborhood(const SpanningForest& f, VertexSet d) {
    f.graph().require_subset(d, "out_neighborhood");
    VertexSet heads;
    for (int v : d.elements())
        if (f.has_out(v) && !d.contains(f.out(v))) heads.add(f.out(v));
    return heads;
}

VertexSet out_neighborhood(const SubForest& g, VertexSet d) {
    g.graph().require_subset(d, "out_neighborhood");
    VertexSet heads;
    for (auto [from, to] : g.arcs())
        if (d.contains(from) && !d.contains(to)) heads.add(to);
    return heads;
}

VertexSet out_neighborhood(const std::vector<SpanningForest>& family, VertexSet d) {
    VertexSet u;
    for (const auto& f : family) u = u | out_neighborhood(f, d);
    return u;
}

VertexSet in_neighborhood(const SpanningForest& f, VertexSet d) {
    f.graph().require_subset(d, "in_neighborhood");
    VertexSet tails;
    for (int v = 0; v < f.graph().vertex_count(); ++v)
        if (!d.contains(v) && f.has_out(v) && d.contains(f.out(v))) tails.add(v);
    return tails;
}

VertexSet in_neighborhood(const SubForest& g, VertexSet d) {
    g.graph().require_subset(d, "in_neighborhood");
    VertexSet tails;
    for (auto [from, to] : g.arcs())
        if (!d.contains(from) && d.contains(to)) tails.add(from);
    return tails;
}

VertexSet in_neighborhood(const std::vector<SpanningForest>& family, VertexSet d) {
    VertexSet u;
    for (const auto& f : family) u = u | in_neighborhood(f, d);
    return u;
}

SpanningForest CandidateGraph::forest() const {
    if (!is_forest) throw DomainError("candidate graph is not a forest");
    return SpanningForest(*graph, out);
}

namespace {

CandidateGraph replace_impl(const SpanningForest& f, VertexSet d,
                            const std::vector<int>& replacement_out) {
    f.graph().require_subset(d, "arc_replace");
    const int n = f.graph().vertex_count();
    CandidateGraph cand{&f.graph(), f.out_map(), false, 0};
    for (int v : d.elements()) cand.out[static_cast<std::size_t>(v)] = replacement_out[static_cast<std::size_t>(v)];
    cand.is_forest = true;
    for (int v = 0; v < n && cand.is_forest; ++v)
        if (closes_cycle(cand.out, v)) cand.is_forest = false;
    if (cand.is_forest) {
        int arcs = 0;
        for (int t : cand.out) arcs += (t != SpanningForest::kNoArc);
        cand.tree_count = n - arcs;
    }
    return cand;
}

}  // namespace

CandidateGraph arc_replace(const SpanningForest& f, const SpanningForest& g, VertexSet d) {
    require_same_graph(&f.graph(), &g.graph(), "arc_replace");
    if (!d.subset_of(g.graph().vertices()))
        throw DomainError("arc_replace: subset leaves the replacement's vertices");
    return replace_impl(f, d, g.out_map());
}

CandidateGraph arc_replace(const SpanningForest& f, const SubForest& g, VertexSet d) {
    require_same_graph(&f.graph(), &g.graph(), "arc_replace");
    if (!d.subset_of(g.vertex_set()))
        throw DomainError("arc_replace: subset leaves the replacement's vertices");
    std::vector<int> out(static_cast<std::size_t>(f.graph().vertex_count()), SpanningForest::kNoArc);
    for (auto [from, to] : g.arcs()) out[static_cast<std::size_t>(from)] = to;
    return replace_impl(f, d, out);
}

std::vector<TreeComponent> trees_and_roots(const SpanningForest& f) {
    std::vector<TreeComponent> out;
    const int n = f.graph().vertex_count();
    std::vector<int> root(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) root[static_cast<std::size_t>(v)] = f.root_of(v);
    for (int r : f.roots().elements()) {
        TreeComponent tc{r, {}};
        for (int v = 0; v < n; ++v)
            if (root[static_cast<std::size_t>(v)] == r) tc.vertices.add(v);
        out.push_back(tc);
    }
    return out;
}

bool is_descendant(const SpanningForest& ancestor, const SpanningForest& descendant) {
    require_same_graph(&ancestor.graph(), &descendant.graph(), "is_descendant");
    if (ancestor.tree_count() != descendant.tree_count() + 1)
        throw DomainError("is_descendant: tree counts must differ by exactly one");

    VertexSet rf = ancestor.roots();
    VertexSet rr = descendant.roots();
    if (!rr.subset_of(rf)) return false;
    VertexSet gone = rf.minus(rr);
    if (gone.count() != 1) return false;
    const int y = gone.elements().front();

    auto tree_of = [](const SpanningForest& f, int root) {
        VertexSet tv;
        for (int v = 0; v < f.graph().vertex_count(); ++v)
            if (f.root_of(v) == root) tv.add(v);
        return tv;
    };

    VertexSet y_tree = tree_of(ancestor, y);
    for (int x : rr.elements()) {
        VertexSet x_tree = tree_of(ancestor, x);
        bool ok = true;
        // Untouched trees keep their vertex sets and arcs verbatim.
        for (int q : rr.elements()) {
            if (q == x) continue;
            VertexSet fq = tree_of(ancestor, q);
            if (!(fq == tree_of(descendant, q))) {
                ok = false;
                break;
            }
            for (int v : fq.elements())
                if (descendant.out(v) != ancestor.out(v)) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (!ok) continue;
        // x's old tree survives as the induced graph on its vertices.
        for (int v : x_tree.elements()) {
            if (v == x) {
                if (descendant.has_out(v) && x_tree.contains(descendant.out(v))) ok = false;
            } else if (descendant.out(v) != ancestor.out(v)) {
                ok = false;
            }
            if (!ok) break;
        }
        if (!ok) continue;
        // y's old territory must still induce a single tree.
        if (restriction(descendant, y_tree).arc_count() != y_tree.count() - 1) continue;
        return true;
    }
    return false;
}

}  // namespace minforest
