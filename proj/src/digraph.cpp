#include "minforest/digraph.hpp"

#include <algorithm>
#include <set>

#include "minforest/errors.hpp"

namespace minforest {

namespace {
constexpr int kMaxVertices = 31;  // VertexSet mask width
}

WeightedDigraph::WeightedDigraph(std::vector<std::string> vertex_names, std::vector<Arc> arcs)
    : names_(std::move(vertex_names)), arcs_(std::move(arcs)) {
    const int n = static_cast<int>(names_.size());
    if (n < 1) throw DomainError("graph needs at least one vertex");
    if (n > kMaxVertices) throw DomainError("graph exceeds the vertex representation limit");
    std::set<std::string> seen(names_.begin(), names_.end());
    if (static_cast<int>(seen.size()) != n) throw DomainError("duplicate vertex name");

    std::sort(arcs_.begin(), arcs_.end(),
              [](const Arc& a, const Arc& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
    adjacency_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    out_targets_.assign(static_cast<std::size_t>(n), {});
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const Arc& a = arcs_[i];
        if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n)
            throw DomainError("arc endpoint out of range");
        if (a.from == a.to) throw DomainError("self-loop arc");
        int& slot = adjacency_[static_cast<std::size_t>(a.from) * static_cast<std::size_t>(n) +
                               static_cast<std::size_t>(a.to)];
        if (slot >= 0) throw DomainError("duplicate arc " + names_[static_cast<std::size_t>(a.from)] +
                                         " -> " + names_[static_cast<std::size_t>(a.to)]);
        slot = static_cast<int>(i);
        out_targets_[static_cast<std::size_t>(a.from)].push_back(a.to);
    }
}

int WeightedDigraph::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

const Rational& WeightedDigraph::weight(int from, int to) const {
    int idx = arc_index(from, to);
    if (idx < 0)
        throw DomainError("no arc " + name(from) + " -> " + name(to));
    return arcs_[static_cast<std::size_t>(idx)].weight;
}

bool WeightedDigraph::operator==(const WeightedDigraph& o) const {
    if (names_ != o.names_ || arcs_.size() != o.arcs_.size()) return false;
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        if (arcs_[i].from != o.arcs_[i].from || arcs_[i].to != o.arcs_[i].to ||
            !(arcs_[i].weight == o.arcs_[i].weight))
            return false;
    }
    return true;
}

void WeightedDigraph::require_subset(VertexSet d, const char* what) const {
    if (!d.subset_of(vertices()))
        throw DomainError(std::string(what) + ": subset mentions vertices outside the graph");
}

std::string set_str(const WeightedDigraph& graph, VertexSet d) {
    std::string out = "{";
    bool first = true;
    for (int v : d.elements()) {
        if (!first) out += ',';
        first = false;
        out += graph.name(v);
    }
    out += '}';
    return out;
}

}  // namespace minforest
