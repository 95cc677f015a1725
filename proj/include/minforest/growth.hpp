#pragma once

#include <optional>
#include <vector>

#include "minforest/atoms.hpp"
#include "minforest/tree_minima.hpp"

namespace minforest {

/// Atom partition at level k together with the tree minimizer sets each
/// construction draws from: spanning-tree minima inside every labeled atom,
/// exit-tree minima for every atom that is a proper vertex subset.
struct AtomTreeCatalog {
    const ForestAtlas* atlas = nullptr;
    int k = 0;
    AtomPartition partition;
    std::vector<TreeMinimumSet> rooted;  // parallel to atoms; labeled atoms only
    std::vector<TreeMinimumSet> exit;    // parallel to atoms; proper subsets only
};

AtomTreeCatalog build_catalog(const ForestAtlas& atlas, int k);

/// Rebuilds the minimal k-forest family from per-atom trees alone: one
/// spanning-tree minimizer per labeled atom, one exit-tree minimizer per
/// unlabeled atom, keep the unions that stay forests with k trees. Requires
/// the strict gap sign at k.
MinimalForestFamily assemble_level_k(const AtomTreeCatalog& catalog);

/// Minimal (k-1)-family from the minimal k-family: replace the arcs on one
/// labeled atom of some minimal k-forest by an exit-tree minimizer, keep the
/// valid (k-1)-forests of least weight. Requires the strict gap sign at k
/// and a nonempty level below.
MinimalForestFamily descend(const AtomTreeCatalog& catalog);

/// The descend construction without its sign precondition, for probing
/// regimes where the theory gives no guarantee.
MinimalForestFamily descend_candidates(const AtomTreeCatalog& catalog);

enum class AtomRegime { AlwaysOutgoing, NeverOutgoing, Mixed };

struct AtomRegimeEntry {
    VertexSet atom;
    AtomRegime regime;
    /// Filled when classifying against level k-1 and the regime is
    /// AlwaysOutgoing: the gap sign one level down must then be strict.
    std::optional<bool> strict_sign_below;
};

/// Regime of every labeled atom of level k against the minimal l-family:
/// does each member send an arc out of the atom, none, or mixed.
std::vector<AtomRegimeEntry> classify_regimes(const ForestAtlas& atlas, int k, int l);

/// Deduplicated outgoing restrictions of the family members onto D.
std::vector<SubForest> restriction_set(const std::vector<SpanningForest>& family, VertexSet d);
/// Deduplicated induced restrictions (arcs inside D only).
std::vector<SubForest> induced_restriction_set(const std::vector<SpanningForest>& family,
                                               VertexSet d);

}  // namespace minforest
