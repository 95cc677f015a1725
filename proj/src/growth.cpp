#include "minforest/growth.hpp"

#include <algorithm>

#include "minforest/errors.hpp"

namespace minforest {

namespace {

void require_strict(const ForestAtlas& atlas, int k, const char* what) {
    if (!atlas.profile.strict_at(k))
        throw DomainError(std::string(what) + ": needs the strict gap sign at k=" +
                          std::to_string(k));
}

}  // namespace

AtomTreeCatalog build_catalog(const ForestAtlas& atlas, int k) {
    AtomTreeCatalog cat;
    cat.atlas = &atlas;
    cat.k = k;
    cat.partition = atom_partition(atlas, k);
    const std::size_t m = cat.partition.atoms.size();
    cat.rooted.resize(m);
    cat.exit.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        VertexSet atom = cat.partition.atoms[i];
        if (cat.partition.labeled[i]) {
            TreeMinimaRecord rec = rooted_tree_minima(*atlas.graph, atom);
            cat.rooted[i] = std::move(rec.rooted);
        }
        if (!(atom == atlas.graph->vertices()))
            cat.exit[i] = exit_tree_minima(*atlas.graph, atom);
    }
    return cat;
}

MinimalForestFamily assemble_level_k(const AtomTreeCatalog& catalog) {
    const ForestAtlas& atlas = *catalog.atlas;
    require_strict(atlas, catalog.k, "assemble_level_k");
    const WeightedDigraph& graph = *atlas.graph;
    const AtomPartition& part = catalog.partition;

    std::vector<const std::vector<SubForest>*> pools;
    long long combinations = 1;
    for (std::size_t i = 0; i < part.atoms.size(); ++i) {
        const TreeMinimumSet& set = part.labeled[i] ? catalog.rooted[i] : catalog.exit[i];
        if (set.trees.empty())
            throw DomainError("assemble_level_k: an atom has no minimizer tree to draw from");
        pools.push_back(&set.trees);
        combinations *= static_cast<long long>(set.trees.size());
        if (combinations > kFamilyCap)
            throw ResourceError("assemble_level_k: combination count exceeds the cap");
    }

    MinimalForestFamily fam;
    fam.k = catalog.k;
    std::vector<std::size_t> pick(pools.size(), 0);
    const int n = graph.vertex_count();
    for (;;) {
        std::vector<int> out(static_cast<std::size_t>(n), SpanningForest::kNoArc);
        // Atoms partition the vertices and each tree only uses out-arcs of
        // its own atom's vertices, so the union never collides.
        for (std::size_t i = 0; i < pools.size(); ++i)
            for (auto [from, to] : (*pools[i])[pick[i]].arcs())
                out[static_cast<std::size_t>(from)] = to;
        bool acyclic = true;
        for (int v = 0; v < n && acyclic; ++v) {
            int steps = 0;
            int w = v;
            while (w != SpanningForest::kNoArc) {
                w = out[static_cast<std::size_t>(w)];
                if (++steps > n) {
                    acyclic = false;
                    break;
                }
            }
        }
        if (acyclic) {
            SpanningForest forest(graph, out);
            if (forest.tree_count() == catalog.k) {
                ExtRational w{total_weight(forest)};
                if (w < fam.weight) {
                    fam.weight = w;
                    fam.forests.clear();
                }
                if (w == fam.weight) fam.forests.push_back(std::move(forest));
            }
        }
        std::size_t i = 0;
        while (i < pools.size() && ++pick[i] == pools[i]->size()) pick[i++] = 0;
        if (i == pools.size()) break;
    }
    std::sort(fam.forests.begin(), fam.forests.end());
    fam.forests.erase(std::unique(fam.forests.begin(), fam.forests.end()), fam.forests.end());
    return fam;
}

MinimalForestFamily descend_candidates(const AtomTreeCatalog& catalog) {
    const ForestAtlas& atlas = *catalog.atlas;
    if (catalog.k < 2) throw DomainError("descend: no level below k=1");
    if (!atlas.level_nonempty(catalog.k - 1))
        throw DomainError("descend: no spanning forest with k-1 trees exists");
    const AtomPartition& part = catalog.partition;

    MinimalForestFamily fam;
    fam.k = catalog.k - 1;
    for (const SpanningForest& p : atlas.family(catalog.k).forests) {
        for (std::size_t i = 0; i < part.atoms.size(); ++i) {
            if (!part.labeled[i]) continue;
            for (const SubForest& t : catalog.exit[i].trees) {
                CandidateGraph cand = arc_replace(p, t, part.atoms[i]);
                if (!cand.is_forest || cand.tree_count != catalog.k - 1) continue;
                SpanningForest forest = cand.forest();
                ExtRational w{total_weight(forest)};
                if (w < fam.weight) {
                    fam.weight = w;
                    fam.forests.clear();
                }
                if (w == fam.weight) fam.forests.push_back(std::move(forest));
            }
        }
    }
    std::sort(fam.forests.begin(), fam.forests.end());
    fam.forests.erase(std::unique(fam.forests.begin(), fam.forests.end()), fam.forests.end());
    return fam;
}

MinimalForestFamily descend(const AtomTreeCatalog& catalog) {
    require_strict(*catalog.atlas, catalog.k, "descend");
    return descend_candidates(catalog);
}

std::vector<AtomRegimeEntry> classify_regimes(const ForestAtlas& atlas, int k, int l) {
    const MinimalForestFamily& fam = atlas.family(l);
    if (fam.forests.empty())
        throw DomainError("classify_regimes: no spanning forest with " + std::to_string(l) +
                          " trees");
    AtomPartition part = atom_partition(atlas, k);
    std::vector<AtomRegimeEntry> out;
    for (std::size_t i = 0; i < part.atoms.size(); ++i) {
        if (!part.labeled[i]) continue;
        VertexSet atom = part.atoms[i];
        int outgoing = 0;
        for (const SpanningForest& f : fam.forests)
            outgoing += !out_neighborhood(f, atom).empty();
        AtomRegimeEntry entry{atom, AtomRegime::Mixed, std::nullopt};
        if (outgoing == static_cast<int>(fam.forests.size()))
            entry.regime = AtomRegime::AlwaysOutgoing;
        else if (outgoing == 0)
            entry.regime = AtomRegime::NeverOutgoing;
        if (entry.regime == AtomRegime::AlwaysOutgoing && l == k - 1 && k - 1 >= 1)
            entry.strict_sign_below = atlas.profile.strict_at(k - 1);
        out.push_back(entry);
    }
    return out;
}

std::vector<SubForest> restriction_set(const std::vector<SpanningForest>& family, VertexSet d) {
    std::vector<SubForest> out;
    for (const SpanningForest& f : family) out.push_back(outgoing_restriction(f, d));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<SubForest> induced_restriction_set(const std::vector<SpanningForest>& family,
                                               VertexSet d) {
    std::vector<SubForest> out;
    for (const SpanningForest& f : family) out.push_back(restriction(f, d));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace minforest
