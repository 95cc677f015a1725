#include "minforest/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "minforest/errors.hpp"
#include "minforest/fixtures.hpp"
#include "minforest/graph_io.hpp"

namespace minforest {

namespace {

CheckOutcome ok() { return {Verdict::Pass, ""}; }
CheckOutcome skipped(std::string reason) { return {Verdict::Skip, std::move(reason)}; }
CheckOutcome failed(std::string detail) { return {Verdict::Fail, std::move(detail)}; }

std::string forest_str(const SpanningForest& f) {
    const WeightedDigraph& g = f.graph();
    std::string out = "{";
    bool first = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!f.has_out(v)) continue;
        if (!first) out += ", ";
        first = false;
        out += g.name(v) + "->" + g.name(f.out(v));
    }
    return out + "}";
}

std::string sub_str(const SubForest& s) {
    const WeightedDigraph& g = s.graph();
    std::string out = set_str(g, s.vertex_set()) + ":{";
    bool first = true;
    for (auto [from, to] : s.arcs()) {
        if (!first) out += ", ";
        first = false;
        out += g.name(from) + "->" + g.name(to);
    }
    return out + "}";
}

std::string set_list(const std::vector<SubForest>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += sub_str(v[i]);
    }
    return out + "]";
}

/// a ⊆ b for sorted deduplicated vectors.
bool contains_all(const std::vector<SubForest>& b, const std::vector<SubForest>& a) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool member(const std::vector<SubForest>& v, const SubForest& x) {
    return std::binary_search(v.begin(), v.end(), x);
}

void sort_unique(std::vector<SubForest>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<int> strict_levels(InstanceContext& ctx) {
    std::vector<int> out;
    for (int k : ctx.populated_levels())
        if (ctx.atlas().profile.strict_at(k)) out.push_back(k);
    return out;
}

/// Every union of atoms, the empty set included.
std::vector<VertexSet> algebra_elements(const AtomPartition& part) {
    const std::size_t m = part.atoms.size();
    std::vector<VertexSet> out;
    out.reserve(std::size_t{1} << m);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        VertexSet u;
        for (std::size_t i = 0; i < m; ++i)
            if ((mask >> i) & 1u) u = u | part.atoms[i];
        out.push_back(u);
    }
    return out;
}

/// Maximal runs of equal gap signs braced by strict signs on both sides:
/// the gap drops strictly into level m+1, stays constant through level k,
/// then drops strictly again. Only fully-braced runs qualify.
struct ChainPattern {
    int m;
    int k;
};

std::vector<ChainPattern> chain_patterns(const WeightProfile& prof) {
    std::vector<ChainPattern> out;
    const int n = prof.n();
    int j = 1;
    while (j <= n - 1) {
        if (prof.sign_at(j) != ConvexitySign::Equal) {
            ++j;
            continue;
        }
        int a = j;
        while (j <= n - 1 && prof.sign_at(j) == ConvexitySign::Equal) ++j;
        int b = j - 1;
        int m = a - 1, k = b + 1;
        if (m >= 1 && k <= n - 1 && prof.sign_at(m) == ConvexitySign::Strict &&
            prof.sign_at(k) == ConvexitySign::Strict)
            out.push_back({m, k});
    }
    return out;
}

// ---- statement checks ----------------------------------------------------

CheckOutcome check_p1(InstanceContext& ctx) {
    for (int k : ctx.populated_levels()) {
        for (const SpanningForest& f : ctx.atlas().family(k).forests) {
            for (const TreeComponent& tree : trees_and_roots(f)) {
                ExtRational carried{weight_on(f, tree.vertices)};
                const TreeMinimaRecord& rec = ctx.rooted(tree.vertices);
                if (!(rec.rooted.weight == carried))
                    return failed("k=" + std::to_string(k) + ", forest " + forest_str(f) +
                                  ": tree on " + set_str(ctx.graph(), tree.vertices) +
                                  " weighs " + carried.str() + " but the subset minimum is " +
                                  rec.rooted.weight.str());
                for (const auto& [root, set] : rec.per_root)
                    if (root == tree.root && !(set.weight == carried))
                        return failed("k=" + std::to_string(k) + ", forest " + forest_str(f) +
                                      ": tree rooted at " + ctx.graph().name(root) +
                                      " weighs " + carried.str() +
                                      " but the root-pinned minimum is " + set.weight.str());
            }
        }
    }
    return ok();
}

CheckOutcome check_p2(InstanceContext& ctx) {
    const VertexSet all = ctx.graph().vertices();
    if (ctx.n() < 2) return skipped("no proper nonempty subsets");
    for (std::uint32_t bits = 1; bits < all.bits; ++bits) {
        VertexSet d{bits};
        ExtRational enumerated = ctx.exit_minima(d).weight;
        ExtRational formula = exit_tree_weight_formula(ctx.graph(), d);
        if (!(enumerated == formula))
            return failed("D=" + set_str(ctx.graph(), d) + ": enumerated exit minimum " +
                          enumerated.str() + " vs decomposition " + formula.str());
    }
    return ok();
}

SpanningForest random_forest(const WeightedDigraph& g, std::mt19937_64& rng) {
    const int n = g.vertex_count();
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<int> out(static_cast<std::size_t>(n), SpanningForest::kNoArc);
        for (int v = 0; v < n; ++v) {
            const auto& targets = g.out_targets(v);
            std::size_t pick = static_cast<std::size_t>(rng() % (targets.size() + 1));
            if (pick < targets.size()) out[static_cast<std::size_t>(v)] = targets[pick];
        }
        bool acyclic = true;
        for (int v = 0; v < n && acyclic; ++v) {
            int steps = 0;
            for (int w = v; w != SpanningForest::kNoArc;
                 w = out[static_cast<std::size_t>(w)])
                if (++steps > n) {
                    acyclic = false;
                    break;
                }
        }
        if (acyclic) return SpanningForest(g, std::move(out));
    }
    return SpanningForest::empty(g);
}

CheckOutcome check_p3(InstanceContext& ctx) {
    std::mt19937_64& rng = ctx.sample_rng();
    const std::uint32_t full = ctx.graph().vertices().bits;
    int hypothesis_hits = 0;
    for (int i = 0; i < ctx.samples_per_instance(); ++i) {
        SpanningForest f = random_forest(ctx.graph(), rng);
        SpanningForest g = random_forest(ctx.graph(), rng);
        VertexSet d{1 + static_cast<std::uint32_t>(rng() % full)};
        bool clean_in = in_neighborhood(f, d).empty();
        bool clean_out = out_neighborhood(g, d).empty();
        CandidateGraph cand = arc_replace(f, g, d);
        if ((clean_in || clean_out) && !cand.is_forest)
            return failed("replacing on D=" + set_str(ctx.graph(), d) + " in F=" +
                          forest_str(f) + " with G=" + forest_str(g) +
                          " closed a cycle despite " +
                          (clean_in ? "no arcs entering D in F" : "no arcs leaving D in G"));
        if (clean_in || clean_out) ++hypothesis_hits;
        if (cand.is_forest) {
            SubForest got = outgoing_restriction(cand.forest(), d);
            SubForest want = outgoing_restriction(g, d);
            if (!(got == want))
                return failed("replacement changed the outgoing pattern on D=" +
                              set_str(ctx.graph(), d) + ": " + sub_str(got) + " vs " +
                              sub_str(want));
        }
    }
    if (hypothesis_hits == 0) return skipped("no sampled triple met either boundary hypothesis");
    return ok();
}

CheckOutcome check_p4(InstanceContext& ctx) {
    const ForestAtlas& atlas = ctx.atlas();
    bool applied = false;
    for (int k = 1; k <= ctx.n() - 1; ++k) {
        if (!atlas.level_nonempty(k)) continue;
        applied = true;
        for (const SpanningForest& f : atlas.family(k + 1).forests) {
            std::vector<SpanningForest> lower = descendants_of(atlas, f);
            if (lower.empty())
                return failed("k=" + std::to_string(k + 1) + ": minimal forest " +
                              forest_str(f) + " has no minimal descendant");
            for (const SpanningForest& r : lower)
                for (int v = 0; v < ctx.n(); ++v)
                    if (f.has_out(v) && !r.has_out(v))
                        return failed("descendant " + forest_str(r) + " of " + forest_str(f) +
                                      " dropped the out-arc of " + ctx.graph().name(v));
        }
        for (const SpanningForest& r : atlas.family(k).forests)
            if (ancestors_of(atlas, r).empty())
                return failed("k=" + std::to_string(k) + ": minimal forest " + forest_str(r) +
                              " has no minimal ancestor");
    }
    if (!applied) return skipped("no populated level below the arcless forest");
    return ok();
}

CheckOutcome check_p5(InstanceContext& ctx) {
    const AtomPartition& finest = ctx.partition(ctx.n());
    if (finest.atom_count() != ctx.n())
        return failed("the arcless level must split every vertex apart, got " +
                      std::to_string(finest.atom_count()) + " atoms");
    if (ctx.atlas().level_nonempty(1) && ctx.partition(1).atom_count() != 1)
        return failed("the spanning-tree level must have the single atom, got " +
                      std::to_string(ctx.partition(1).atom_count()));
    for (int k : ctx.populated_levels()) {
        if (k >= ctx.n()) continue;
        const AtomPartition& coarse = ctx.partition(k);
        const AtomPartition& fine = ctx.partition(k + 1);
        for (VertexSet atom : coarse.atoms)
            if (!fine.in_algebra(atom))
                return failed("atom " + set_str(ctx.graph(), atom) + " of level " +
                              std::to_string(k) + " is not a union of level-" +
                              std::to_string(k + 1) + " atoms");
    }
    return ok();
}

CheckOutcome check_p6(InstanceContext& ctx) {
    const WeightProfile& prof = ctx.atlas().profile;
    bool applied = false;
    for (int k = 1; k <= ctx.n() - 1; ++k) {
        if (!prof.equal_at(k)) continue;
        applied = true;
        if (!(ctx.partition(k) == ctx.partition(k + 1)))
            return failed("equal gap at k=" + std::to_string(k) +
                          " but the partitions or labels differ between k and k+1");
        const auto& below = ctx.atlas().family(k - 1).forests;
        const auto& at = ctx.atlas().family(k).forests;
        const auto& above = ctx.atlas().family(k + 1).forests;
        for (VertexSet y : ctx.partition(k).atoms) {
            auto mid = restriction_set(at, y);
            if (!contains_all(mid, restriction_set(below, y)))
                return failed("equal gap at k=" + std::to_string(k) + ": patterns on " +
                              set_str(ctx.graph(), y) + " from below escape the level");
            if (!contains_all(mid, restriction_set(above, y)))
                return failed("equal gap at k=" + std::to_string(k) + ": patterns on " +
                              set_str(ctx.graph(), y) + " from above escape the level");
        }
    }
    if (!applied) return skipped("no equal gap sign in the weight profile");
    return ok();
}

CheckOutcome check_p7(InstanceContext& ctx) {
    for (int k : strict_levels(ctx)) {
        const auto& fam = ctx.atlas().family(k).forests;
        for (VertexSet a : algebra_elements(ctx.partition(k))) {
            int expected = -1;
            for (const SpanningForest& f : fam) {
                int count = 0;
                for (int v : a.elements()) count += f.has_out(v);
                if (expected < 0)
                    expected = count;
                else if (count != expected)
                    return failed("k=" + std::to_string(k) + ": algebra set " +
                                  set_str(ctx.graph(), a) + " emits " + std::to_string(count) +
                                  " arcs in " + forest_str(f) + " but " +
                                  std::to_string(expected) + " elsewhere");
            }
        }
    }
    return ok();
}

CheckOutcome check_p8(InstanceContext& ctx) {
    for (int k : strict_levels(ctx)) {
        const AtomPartition& part = ctx.partition(k);
        int labeled = static_cast<int>(std::count(part.labeled.begin(), part.labeled.end(), true));
        if (labeled != k)
            return failed("strict gap at k=" + std::to_string(k) + " but " +
                          std::to_string(labeled) + " labeled atoms");
    }
    return ok();
}

CheckOutcome check_p9(InstanceContext& ctx) {
    for (int k : strict_levels(ctx)) {
        const AtomPartition& part = ctx.partition(k);
        for (const SpanningForest& f : ctx.atlas().family(k).forests)
            for (const TreeComponent& tree : trees_and_roots(f)) {
                int inside = 0;
                for (int i = 0; i < part.atom_count(); ++i)
                    if (part.labeled[static_cast<std::size_t>(i)] &&
                        part.atoms[static_cast<std::size_t>(i)].subset_of(tree.vertices))
                        ++inside;
                if (inside != 1)
                    return failed("k=" + std::to_string(k) + ", forest " + forest_str(f) +
                                  ": tree on " + set_str(ctx.graph(), tree.vertices) +
                                  " holds " + std::to_string(inside) + " labeled atoms");
            }
    }
    return ok();
}

CheckOutcome check_p10(InstanceContext& ctx) {
    for (int k : strict_levels(ctx)) {
        const auto& fam = ctx.atlas().family(k).forests;
        for (const SpanningForest& f : fam)
            for (VertexSet y : ctx.partition(k).atoms) {
                SubForest want = outgoing_restriction(f, y);
                bool found = false;
                for (const SpanningForest& h : fam)
                    if (in_neighborhood(h, y).empty() && outgoing_restriction(h, y) == want) {
                        found = true;
                        break;
                    }
                if (!found)
                    return failed("k=" + std::to_string(k) + ": no family member matches " +
                                  forest_str(f) + " on " + set_str(ctx.graph(), y) +
                                  " while keeping the atom entry-free");
            }
    }
    return ok();
}

CheckOutcome check_p11(InstanceContext& ctx) {
    for (int k : strict_levels(ctx)) {
        const auto& fam = ctx.atlas().family(k).forests;
        for (VertexSet a : algebra_elements(ctx.partition(k))) {
            bool have = false;
            Rational expected;
            for (const SpanningForest& f : fam) {
                Rational w = weight_on(f, a);
                if (!have) {
                    expected = w;
                    have = true;
                } else if (!(w == expected)) {
                    return failed("k=" + std::to_string(k) + ": algebra set " +
                                  set_str(ctx.graph(), a) + " carries " + w.str() + " in " +
                                  forest_str(f) + " but " + expected.str() + " elsewhere");
                }
            }
        }
    }
    return ok();
}

CheckOutcome check_p12(InstanceContext& ctx) {
    for (int k : strict_levels(ctx)) {
        const AtomPartition& part = ctx.partition(k);
        for (const SpanningForest& f : ctx.atlas().family(k).forests)
            for (VertexSet z : part.labeled_atoms()) {
                if (!out_neighborhood(f, z).empty())
                    return failed("k=" + std::to_string(k) + ": an arc leaves labeled atom " +
                                  set_str(ctx.graph(), z) + " in " + forest_str(f));
                if (!restriction(f, z).is_tree())
                    return failed("k=" + std::to_string(k) + ": labeled atom " +
                                  set_str(ctx.graph(), z) + " does not induce a tree in " +
                                  forest_str(f));
            }
    }
    return ok();
}

CheckOutcome check_p13(InstanceContext& ctx) {
    bool applied = false;
    for (int k : strict_levels(ctx)) {
        if (k < 2 || !ctx.atlas().level_nonempty(k - 1)) continue;
        applied = true;
        const auto& parents = ctx.atlas().family(k).forests;
        auto labeled = ctx.partition(k).labeled_atoms();
        for (const SpanningForest& f : ctx.atlas().family(k - 1).forests) {
            bool found = false;
            for (VertexSet z : labeled) {
                VertexSet rest = z.complement(ctx.n());
                if (rest.empty() || !restriction(f, z).is_tree()) continue;
                SubForest outside = outgoing_restriction(f, rest);
                for (const SpanningForest& p : parents)
                    if (outgoing_restriction(p, rest) == outside) {
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (!found)
                return failed("k=" + std::to_string(k) + ": " + forest_str(f) +
                              " matches no parent outside a single labeled atom");
        }
    }
    if (!applied) return skipped("no strict level has a populated level below");
    return ok();
}

CheckOutcome check_p14(InstanceContext& ctx) {
    bool applied = false;
    for (int k : strict_levels(ctx)) {
        if (k < 2 || !ctx.atlas().level_nonempty(k - 1)) continue;
        auto unlabeled = ctx.partition(k).unlabeled_atoms();
        if (unlabeled.empty()) continue;
        applied = true;
        for (VertexSet x : unlabeled) {
            auto narrow = restriction_set(ctx.atlas().family(k - 1).forests, x);
            auto wide = restriction_set(ctx.atlas().family(k).forests, x);
            if (!contains_all(wide, narrow))
                return failed("k=" + std::to_string(k) + ": patterns on unlabeled " +
                              set_str(ctx.graph(), x) +
                              " one level down are not a subset: " + set_list(narrow) +
                              " vs " + set_list(wide));
        }
    }
    if (!applied) return skipped("no unlabeled atom at a strict level with a level below");
    return ok();
}

CheckOutcome check_p15(InstanceContext& ctx) {
    for (int k : ctx.populated_levels()) {
        const AtomPartition& part = ctx.partition(k);
        std::vector<const std::vector<SpanningForest>*> families;
        families.push_back(&ctx.atlas().family(k).forests);
        if (k >= 2 && ctx.atlas().level_nonempty(k - 1))
            families.push_back(&ctx.atlas().family(k - 1).forests);
        for (const auto* fam : families)
            for (const SpanningForest& f : *fam)
                for (VertexSet y : part.atoms)
                    if (!restriction(f, y).is_tree())
                        return failed("level " + std::to_string(k) + " atom " +
                                      set_str(ctx.graph(), y) + " does not induce a tree in " +
                                      forest_str(f));
    }
    return ok();
}

CheckOutcome check_t1(InstanceContext& ctx) {
    for (int k : strict_levels(ctx)) {
        const auto& fam = ctx.atlas().family(k).forests;
        for (VertexSet z : ctx.partition(k).labeled_atoms()) {
            auto outgoing = restriction_set(fam, z);
            auto induced = induced_restriction_set(fam, z);
            const auto& best = ctx.rooted(z).rooted.trees;
            if (!(outgoing == induced) || !(induced == best))
                return failed("k=" + std::to_string(k) + ", labeled " +
                              set_str(ctx.graph(), z) + ": family patterns " +
                              set_list(outgoing) + " vs rooted minima " + set_list(best));
        }
    }
    return ok();
}

CheckOutcome check_t2(InstanceContext& ctx) {
    bool applied = false;
    for (int k : strict_levels(ctx)) {
        auto unlabeled = ctx.partition(k).unlabeled_atoms();
        if (unlabeled.empty()) continue;
        applied = true;
        for (VertexSet x : unlabeled) {
            auto outgoing = restriction_set(ctx.atlas().family(k).forests, x);
            const auto& best = ctx.exit_minima(x).trees;
            if (!(outgoing == best))
                return failed("k=" + std::to_string(k) + ", unlabeled " +
                              set_str(ctx.graph(), x) + ": family patterns " +
                              set_list(outgoing) + " vs exit minima " + set_list(best));
        }
    }
    if (!applied) return skipped("no unlabeled atom at any strict level");
    return ok();
}

CheckOutcome check_t3(InstanceContext& ctx) {
    bool applied = false;
    for (int k : strict_levels(ctx)) {
        if (k < 2 || !ctx.atlas().level_nonempty(k - 1)) continue;
        auto unlabeled = ctx.partition(k).unlabeled_atoms();
        if (unlabeled.empty()) continue;
        applied = true;
        for (VertexSet x : unlabeled) {
            auto narrow = restriction_set(ctx.atlas().family(k - 1).forests, x);
            if (!contains_all(ctx.exit_minima(x).trees, narrow))
                return failed("k=" + std::to_string(k) + ", unlabeled " +
                              set_str(ctx.graph(), x) +
                              ": a pattern one level down is no exit minimizer: " +
                              set_list(narrow));
        }
    }
    if (!applied) return skipped("no unlabeled atom at a strict level with a level below");
    return ok();
}

CheckOutcome check_t4(InstanceContext& ctx) {
    bool applied = false;
    for (int k : strict_levels(ctx)) {
        if (k < 2 || !ctx.atlas().level_nonempty(k - 1)) continue;
        applied = true;
        auto labeled = ctx.partition(k).labeled_atoms();
        std::map<VertexSet, std::vector<SubForest>> realized;
        for (const SpanningForest& f : ctx.atlas().family(k - 1).forests) {
            int exits = 0;
            VertexSet where;
            for (VertexSet z : labeled)
                if (!out_neighborhood(f, z).empty()) {
                    ++exits;
                    where = z;
                }
            if (exits != 1)
                return failed("k=" + std::to_string(k) + ": " + forest_str(f) + " exits " +
                              std::to_string(exits) + " labeled atoms instead of one");
            realized[where].push_back(outgoing_restriction(f, where));
        }
        for (auto& [z, patterns] : realized) {
            sort_unique(patterns);
            if (!(patterns == ctx.exit_minima(z).trees))
                return failed("k=" + std::to_string(k) + ", labeled " + set_str(ctx.graph(), z) +
                              ": exit patterns " + set_list(patterns) +
                              " differ from the exit minima " +
                              set_list(ctx.exit_minima(z).trees));
        }
    }
    if (!applied) return skipped("no strict level has a populated level below");
    return ok();
}

CheckOutcome check_t5(InstanceContext& ctx) {
    bool applied = false;
    for (int k : strict_levels(ctx)) {
        if (k < 2 || !ctx.atlas().level_nonempty(k - 1)) continue;
        auto regimes = classify_regimes(ctx.atlas(), k, k - 1);
        int always = 0;
        for (const auto& entry : regimes) always += entry.regime == AtomRegime::AlwaysOutgoing;
        if (always == 0) continue;
        applied = true;
        if (always > 1)
            return failed("k=" + std::to_string(k) +
                          ": two labeled atoms exit in every minimal forest one level down");
        for (const auto& entry : regimes) {
            if (entry.regime != AtomRegime::AlwaysOutgoing) continue;
            auto patterns = restriction_set(ctx.atlas().family(k - 1).forests, entry.atom);
            if (!(patterns == ctx.exit_minima(entry.atom).trees))
                return failed("k=" + std::to_string(k) + ", always-exiting " +
                              set_str(ctx.graph(), entry.atom) + ": patterns " +
                              set_list(patterns) + " vs exit minima " +
                              set_list(ctx.exit_minima(entry.atom).trees));
            if (!entry.strict_sign_below.value_or(false))
                return failed("k=" + std::to_string(k) + ", always-exiting " +
                              set_str(ctx.graph(), entry.atom) +
                              ": the gap one level down is not strict");
        }
    }
    if (!applied) return skipped("no atom exits in every minimal forest one level down");
    return ok();
}

CheckOutcome check_t6(InstanceContext& ctx) {
    bool applied = false;
    for (int k : strict_levels(ctx)) {
        if (k < 2 || !ctx.atlas().level_nonempty(k - 1)) continue;
        for (const auto& entry : classify_regimes(ctx.atlas(), k, k - 1)) {
            if (entry.regime != AtomRegime::NeverOutgoing) continue;
            applied = true;
            const auto& fam = ctx.atlas().family(k - 1).forests;
            auto outgoing = restriction_set(fam, entry.atom);
            auto induced = induced_restriction_set(fam, entry.atom);
            const auto& best = ctx.rooted(entry.atom).rooted.trees;
            if (!(outgoing == induced) || !(induced == best))
                return failed("k=" + std::to_string(k) + ", never-exiting " +
                              set_str(ctx.graph(), entry.atom) + ": patterns " +
                              set_list(outgoing) + " vs rooted minima " + set_list(best));
        }
    }
    if (!applied) return skipped("no atom stays internal in every minimal forest one level down");
    return ok();
}

/// Splits a family by whether an arc leaves the atom; exit side keeps the
/// outgoing restriction, internal side the induced one.
void split_on_atom(const std::vector<SpanningForest>& fam, VertexSet atom,
                   std::vector<SubForest>& exits, std::vector<SubForest>& stays) {
    for (const SpanningForest& f : fam) {
        if (!out_neighborhood(f, atom).empty())
            exits.push_back(outgoing_restriction(f, atom));
        else
            stays.push_back(restriction(f, atom));
    }
    sort_unique(exits);
    sort_unique(stays);
}

CheckOutcome check_t7(InstanceContext& ctx) {
    bool applied = false;
    for (int k : strict_levels(ctx)) {
        if (k < 2 || !ctx.atlas().level_nonempty(k - 1)) continue;
        for (const auto& entry : classify_regimes(ctx.atlas(), k, k - 1)) {
            if (entry.regime != AtomRegime::Mixed) continue;
            applied = true;
            std::vector<SubForest> exits, stays;
            split_on_atom(ctx.atlas().family(k - 1).forests, entry.atom, exits, stays);
            if (!(exits == ctx.exit_minima(entry.atom).trees))
                return failed("k=" + std::to_string(k) + ", mixed " +
                              set_str(ctx.graph(), entry.atom) + ": exit side " +
                              set_list(exits) + " vs exit minima " +
                              set_list(ctx.exit_minima(entry.atom).trees));
            if (!(stays == ctx.rooted(entry.atom).rooted.trees))
                return failed("k=" + std::to_string(k) + ", mixed " +
                              set_str(ctx.graph(), entry.atom) + ": internal side " +
                              set_list(stays) + " vs rooted minima " +
                              set_list(ctx.rooted(entry.atom).rooted.trees));
        }
    }
    if (!applied) return skipped("no atom is mixed one level down from a strict level");
    return ok();
}

CheckOutcome check_t8(InstanceContext& ctx) {
    auto patterns = chain_patterns(ctx.atlas().profile);
    if (patterns.empty()) return skipped("no equal-gap run braced by strict gaps");
    for (auto [m, k] : patterns) {
        const AtomPartition& base = ctx.partition(m + 1);
        for (int l = m + 2; l <= k; ++l)
            if (!(ctx.partition(l) == base))
                return failed("run m=" + std::to_string(m) + "..k=" + std::to_string(k) +
                              ": partitions differ between levels " + std::to_string(m + 1) +
                              " and " + std::to_string(l));
        for (VertexSet y : ctx.partition(k).atoms) {
            auto interior = restriction_set(ctx.atlas().family(m + 1).forests, y);
            if (!contains_all(interior, restriction_set(ctx.atlas().family(m).forests, y)))
                return failed("run m=" + std::to_string(m) + "..k=" + std::to_string(k) +
                              ": bottom patterns on " + set_str(ctx.graph(), y) +
                              " escape the interior");
            for (int l = m + 2; l <= k - 1; ++l)
                if (!(restriction_set(ctx.atlas().family(l).forests, y) == interior))
                    return failed("run m=" + std::to_string(m) + "..k=" + std::to_string(k) +
                                  ": interior patterns on " + set_str(ctx.graph(), y) +
                                  " change at level " + std::to_string(l));
            if (!contains_all(interior, restriction_set(ctx.atlas().family(k).forests, y)))
                return failed("run m=" + std::to_string(m) + "..k=" + std::to_string(k) +
                              ": top patterns on " + set_str(ctx.graph(), y) +
                              " escape the interior");
        }
    }
    return ok();
}

CheckOutcome check_t9(InstanceContext& ctx) {
    auto patterns = chain_patterns(ctx.atlas().profile);
    if (patterns.empty()) return skipped("no equal-gap run braced by strict gaps");
    bool applied = false;
    for (auto [m, k] : patterns) {
        for (const auto& entry : classify_regimes(ctx.atlas(), k, k - 1)) {
            if (entry.regime != AtomRegime::NeverOutgoing) continue;
            applied = true;
            for (int l = m; l <= k; ++l) {
                const auto& fam = ctx.atlas().family(l).forests;
                auto outgoing = restriction_set(fam, entry.atom);
                auto induced = induced_restriction_set(fam, entry.atom);
                const auto& best = ctx.rooted(entry.atom).rooted.trees;
                if (!(outgoing == induced) || !(induced == best))
                    return failed("run m=" + std::to_string(m) + "..k=" + std::to_string(k) +
                                  ", never-exiting " + set_str(ctx.graph(), entry.atom) +
                                  " at level " + std::to_string(l) + ": patterns " +
                                  set_list(outgoing) + " vs rooted minima " + set_list(best));
            }
        }
    }
    if (!applied) return skipped("no never-exiting atom under an equal-gap run");
    return ok();
}

CheckOutcome check_t10(InstanceContext& ctx) {
    auto patterns = chain_patterns(ctx.atlas().profile);
    if (patterns.empty()) return skipped("no equal-gap run braced by strict gaps");
    bool applied = false;
    for (auto [m, k] : patterns) {
        for (const auto& entry : classify_regimes(ctx.atlas(), k, k - 1)) {
            if (entry.regime != AtomRegime::Mixed) continue;
            applied = true;
            for (int l = m + 1; l <= k - 1; ++l) {
                std::vector<SubForest> exits, stays;
                split_on_atom(ctx.atlas().family(l).forests, entry.atom, exits, stays);
                if (exits.empty() || stays.empty())
                    return failed("run m=" + std::to_string(m) + "..k=" + std::to_string(k) +
                                  ", mixed " + set_str(ctx.graph(), entry.atom) + " at level " +
                                  std::to_string(l) + ": one side of the split is empty");
                if (!(exits == ctx.exit_minima(entry.atom).trees))
                    return failed("run m=" + std::to_string(m) + "..k=" + std::to_string(k) +
                                  ", mixed " + set_str(ctx.graph(), entry.atom) + " at level " +
                                  std::to_string(l) + ": exit side " + set_list(exits) +
                                  " vs exit minima " +
                                  set_list(ctx.exit_minima(entry.atom).trees));
                if (!(stays == ctx.rooted(entry.atom).rooted.trees))
                    return failed("run m=" + std::to_string(m) + "..k=" + std::to_string(k) +
                                  ", mixed " + set_str(ctx.graph(), entry.atom) + " at level " +
                                  std::to_string(l) + ": internal side " + set_list(stays) +
                                  " vs rooted minima " +
                                  set_list(ctx.rooted(entry.atom).rooted.trees));
            }
        }
    }
    if (!applied) return skipped("no mixed atom under an equal-gap run");
    return ok();
}

CheckOutcome check_t11(InstanceContext& ctx) {
    auto patterns = chain_patterns(ctx.atlas().profile);
    if (patterns.empty()) return skipped("no equal-gap run braced by strict gaps");
    bool applied = false;
    for (auto [m, k] : patterns) {
        for (const auto& entry : classify_regimes(ctx.atlas(), k, k - 1)) {
            if (entry.regime != AtomRegime::Mixed) continue;
            applied = true;
            const auto& bottom = ctx.atlas().family(m).forests;
            std::vector<SubForest> exits, stays;
            split_on_atom(bottom, entry.atom, exits, stays);
            if (exits.empty())
                return failed("run m=" + std::to_string(m) + "..k=" + std::to_string(k) +
                              ", mixed " + set_str(ctx.graph(), entry.atom) +
                              ": no bottom-level member keeps an exit");
            const auto& exit_best = ctx.exit_minima(entry.atom).trees;
            for (const SubForest& pattern : exits)
                if (!member(exit_best, pattern))
                    return failed("run m=" + std::to_string(m) + "..k=" + std::to_string(k) +
                                  ", mixed " + set_str(ctx.graph(), entry.atom) +
                                  ": bottom exit pattern " + sub_str(pattern) +
                                  " is no exit minimizer");
            if (stays.empty()) {
                // Everyone exits: inclusion is guaranteed above, equality is
                // not; record when exit minimizers go unrealized.
                if (ctx.observations && exits.size() < exit_best.size())
                    ++ctx.observations->mixed_bottom_proper_inclusions;
            } else if (!(stays == ctx.rooted(entry.atom).rooted.trees)) {
                return failed("run m=" + std::to_string(m) + "..k=" + std::to_string(k) +
                              ", mixed " + set_str(ctx.graph(), entry.atom) +
                              ": internal bottom side " + set_list(stays) +
                              " vs rooted minima " +
                              set_list(ctx.rooted(entry.atom).rooted.trees));
            }
        }
    }
    if (!applied) return skipped("no mixed atom under an equal-gap run");
    return ok();
}

CheckOutcome check_assemble(InstanceContext& ctx) {
    for (int k : strict_levels(ctx)) {
        AtomTreeCatalog catalog = build_catalog(ctx.atlas(), k);
        MinimalForestFamily built = assemble_level_k(catalog);
        const MinimalForestFamily& want = ctx.atlas().family(k);
        if (!(built.weight == want.weight) || built.forests != want.forests)
            return failed("k=" + std::to_string(k) + ": rebuilt family (" +
                          std::to_string(built.forests.size()) + " forests, weight " +
                          built.weight.str() + ") differs from the enumeration (" +
                          std::to_string(want.forests.size()) + ", " + want.weight.str() + ")");
    }
    return ok();
}

CheckOutcome check_descend(InstanceContext& ctx) {
    bool applied = false;
    for (int k : strict_levels(ctx)) {
        if (k < 2 || !ctx.atlas().level_nonempty(k - 1)) continue;
        applied = true;
        AtomTreeCatalog catalog = build_catalog(ctx.atlas(), k);
        MinimalForestFamily built = descend(catalog);
        const MinimalForestFamily& want = ctx.atlas().family(k - 1);
        if (!(built.weight == want.weight) || built.forests != want.forests)
            return failed("k=" + std::to_string(k) + ": rebuilt level below (" +
                          std::to_string(built.forests.size()) + " forests, weight " +
                          built.weight.str() + ") differs from the enumeration (" +
                          std::to_string(want.forests.size()) + ", " + want.weight.str() + ")");
    }
    if (!applied) return skipped("no strict level has a populated level below");
    return ok();
}

}  // namespace

InstanceContext::InstanceContext(WeightedDigraph graph, std::uint64_t sample_seed,
                                 int samples_per_instance)
    : graph_(std::move(graph)),
      atlas_(enumerate_atlas(graph_)),
      sample_seed_(sample_seed),
      samples_(samples_per_instance),
      sample_rng_(sample_seed) {}

const AtomPartition& InstanceContext::partition(int k) {
    auto it = partitions_.find(k);
    if (it == partitions_.end()) it = partitions_.emplace(k, atom_partition(atlas_, k)).first;
    return it->second;
}

const TreeMinimaRecord& InstanceContext::rooted(VertexSet d) {
    auto it = rooted_.find(d);
    if (it == rooted_.end()) it = rooted_.emplace(d, rooted_tree_minima(graph_, d)).first;
    return it->second;
}

const TreeMinimumSet& InstanceContext::exit_minima(VertexSet d) {
    auto it = exit_.find(d);
    if (it == exit_.end()) it = exit_.emplace(d, exit_tree_minima(graph_, d)).first;
    return it->second;
}

std::vector<int> InstanceContext::populated_levels() const {
    std::vector<int> out;
    for (int k = 1; k <= n(); ++k)
        if (atlas_.level_nonempty(k)) out.push_back(k);
    return out;
}

const std::vector<CheckSpec>& check_registry() {
    static const std::vector<CheckSpec> registry = {
        {"P1", "every tree of a minimal forest is a cheapest in-tree on its vertex set",
         CheckKind::Property, check_p1},
        {"P2", "exit minima split into a rooted minimum plus the cheapest leaving arc",
         CheckKind::Property, check_p2},
        {"P3", "arc replacement keeps forests when either boundary is clean",
         CheckKind::Property, check_p3},
        {"P4", "minimal families are linked level to level and arcs never retract",
         CheckKind::Property, check_p4},
        {"P5", "atom partitions refine as the tree count grows", CheckKind::Property, check_p5},
        {"P6", "an equal gap freezes atoms, labels, and restriction patterns",
         CheckKind::Property, check_p6},
        {"P7", "strict gap: arc counts per algebra set are family-invariant",
         CheckKind::Property, check_p7},
        {"P8", "strict gap: exactly k labeled atoms", CheckKind::Property, check_p8},
        {"P9", "strict gap: each tree holds exactly one labeled atom", CheckKind::Property,
         check_p9},
        {"P10", "strict gap: a matching member exists with no arcs entering the atom",
         CheckKind::Property, check_p10},
        {"P11", "strict gap: weights per algebra set are family-invariant",
         CheckKind::Property, check_p11},
        {"P12", "strict gap: labeled atoms keep their arcs inside and induce trees",
         CheckKind::Property, check_p12},
        {"P13", "strict gap: each member below matches a parent outside one labeled atom",
         CheckKind::Property, check_p13},
        {"P14", "strict gap: unlabeled exit patterns only narrow one level down",
         CheckKind::Property, check_p14},
        {"P15", "atoms induce trees in minimal forests at and one below their level",
         CheckKind::Property, check_p15},
        {"T1", "labeled atoms carry exactly the rooted minimizer trees", CheckKind::Theorem,
         check_t1},
        {"T2", "unlabeled atoms carry exactly the exit minimizer trees", CheckKind::Theorem,
         check_t2},
        {"T3", "one level down, unlabeled patterns stay exit minimizers", CheckKind::Theorem,
         check_t3},
        {"T4", "one level down, exactly one labeled atom exits and all exit minimizers appear",
         CheckKind::Theorem, check_t4},
        {"T5", "an atom exiting everywhere one level down forces the next gap strict",
         CheckKind::Theorem, check_t5},
        {"T6", "an atom exiting nowhere one level down carries the rooted minimizers",
         CheckKind::Theorem, check_t6},
        {"T7", "a mixed atom splits the level below into exit and rooted carriers",
         CheckKind::Theorem, check_t7},
        {"T8", "equal-gap runs freeze partitions and interior restriction patterns",
         CheckKind::Theorem, check_t8},
        {"T9", "never-exiting atoms carry rooted minimizers along the whole run",
         CheckKind::Theorem, check_t9},
        {"T10", "mixed atoms split every interior level of the run", CheckKind::Theorem,
         check_t10},
        {"T11", "at the run's bottom, exits persist and both sides stay minimizers",
         CheckKind::Theorem, check_t11},
        {"assemble", "per-atom minimizer products rebuild the minimal family exactly",
         CheckKind::Construction, check_assemble},
        {"descend", "labeled-atom replacement rebuilds the level below exactly",
         CheckKind::Construction, check_descend},
    };
    return registry;
}

const CheckSpec& check_by_id(const std::string& id) {
    for (const CheckSpec& spec : check_registry())
        if (id == spec.id) return spec;
    throw DomainError("unknown check id: " + id);
}

WeightedDigraph random_graph(std::uint64_t seed, int n, double density, long long lo,
                             long long hi, WeightMode mode) {
    if (n < 1 || n > 31) throw DomainError("random_graph: vertex count out of range");
    if (lo > hi) throw DomainError("random_graph: empty weight range");
    std::mt19937_64 gen(seed);
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
    std::vector<std::pair<int, int>> pairs;
    for (int from = 0; from < n; ++from)
        for (int to = 0; to < n; ++to) {
            if (from == to) continue;
            if (std::ldexp(static_cast<double>(gen() >> 11), -53) < density)
                pairs.emplace_back(from, to);
        }
    std::vector<Arc> arcs;
    arcs.reserve(pairs.size());
    if (mode == WeightMode::SmallInts) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        for (auto [from, to] : pairs)
            arcs.push_back({from, to, Rational(lo + static_cast<long long>(gen() % span))});
    } else {
        if (pairs.size() > 62)
            throw ResourceError("random_graph: too many arcs for distinct powers of two");
        std::vector<int> exponent(pairs.size());
        std::iota(exponent.begin(), exponent.end(), 0);
        for (std::size_t i = exponent.size(); i > 1; --i)
            std::swap(exponent[i - 1], exponent[static_cast<std::size_t>(gen() % i)]);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            arcs.push_back({pairs[i].first, pairs[i].second,
                            Rational(1LL << exponent[i])});
    }
    return WeightedDigraph(std::move(names), std::move(arcs));
}

namespace {

CheckOutcome run_one(const CheckSpec& spec, InstanceContext& ctx) {
    try {
        return spec.run(ctx);
    } catch (const ResourceError& e) {
        return skipped(std::string("resource cap: ") + e.what());
    } catch (const DomainError& e) {
        return failed(std::string("unexpected domain error: ") + e.what());
    }
}

bool replay_fails(const CheckSpec& spec, const std::string& document, std::uint64_t sample_seed,
                  int samples) {
    std::optional<InstanceContext> fresh;
    try {
        fresh.emplace(parse_graph(document), sample_seed, samples);
    } catch (...) {
        return false;
    }
    return run_one(spec, *fresh).verdict == Verdict::Fail;
}

void observe(InstanceContext& ctx, Observations& obs) {
    const WeightProfile& prof = ctx.atlas().profile;
    for (int k = 1; k <= ctx.n() - 1; ++k) {
        if (!prof.equal_at(k)) continue;
        ++obs.equality_levels;
        if (!ctx.partition(k).unlabeled_atoms().empty()) ++obs.equality_levels_with_unlabeled;
        if (k >= 2 && ctx.atlas().level_nonempty(k - 1)) {
            AtomTreeCatalog catalog = build_catalog(ctx.atlas(), k);
            MinimalForestFamily candidates = descend_candidates(catalog);
            const MinimalForestFamily& want = ctx.atlas().family(k - 1);
            if (candidates.weight == want.weight && candidates.forests == want.forests)
                ++obs.equality_descend_agree;
            else
                ++obs.equality_descend_disagree;
        }
    }
}

const char* mode_str(WeightMode mode) {
    return mode == WeightMode::SmallInts ? "small-ints" : "powers-of-two";
}

const char* kind_str(CheckKind kind) {
    switch (kind) {
        case CheckKind::Property: return "property";
        case CheckKind::Theorem: return "theorem";
        default: return "construction";
    }
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig& config) {
    const auto& registry = check_registry();
    CampaignReport report;
    report.config = config;
    report.tallies.assign(registry.size(), CheckTally{});

    struct Job {
        std::string label;
        std::string document;
        std::uint64_t sample_seed;
    };
    std::vector<Job> jobs;
    std::mt19937_64 master(config.seed);
    if (config.include_fixtures || config.fixtures_only) {
        for (const Fixture& fixture : fixtures())
            jobs.push_back({std::string("fixture:") + fixture.name, fixture.document, master()});
    }
    if (!config.fixtures_only) {
        for (int i = 0; i < config.instances; ++i) {
            std::uint64_t graph_seed = master();
            std::uint64_t sample_seed = master();
            int n = config.min_n;
            if (config.max_n > config.min_n)
                n += static_cast<int>(master() %
                                      static_cast<std::uint64_t>(config.max_n - config.min_n + 1));
            double density =
                0.35 + 0.60 * std::ldexp(static_cast<double>(master() >> 11), -53);
            WeightedDigraph graph = random_graph(graph_seed, n, density, config.weight_lo,
                                                 config.weight_hi, config.weights);
            char label[96];
            std::snprintf(label, sizeof label, "random[%d] n=%d density=%.4f seed=%llu", i, n,
                          density, static_cast<unsigned long long>(graph_seed));
            jobs.push_back({label, serialize_graph(graph), sample_seed});
        }
    }

    constexpr std::size_t kWitnessCap = 25;
    for (const Job& job : jobs) {
        std::optional<InstanceContext> ctx;
        try {
            ctx.emplace(parse_graph(job.document), job.sample_seed,
                        config.samples_per_instance);
        } catch (const ResourceError&) {
            ++report.instances_capped;
            for (CheckTally& tally : report.tallies) ++tally.skip;
            continue;
        }
        ctx->observations = &report.observations;
        ++report.instances_run;
        for (std::size_t c = 0; c < registry.size(); ++c) {
            CheckOutcome outcome = run_one(registry[c], *ctx);
            switch (outcome.verdict) {
                case Verdict::Pass: ++report.tallies[c].pass; break;
                case Verdict::Skip: ++report.tallies[c].skip; break;
                case Verdict::Fail: ++report.tallies[c].fail; break;
            }
            if (outcome.verdict == Verdict::Fail && report.failures.size() < kWitnessCap) {
                FailureWitness witness;
                witness.check = registry[c].id;
                witness.instance = job.label;
                witness.graph_text = job.document;
                witness.sample_seed = job.sample_seed;
                witness.detail = outcome.detail;
                witness.replayed = replay_fails(registry[c], job.document, job.sample_seed,
                                                config.samples_per_instance);
                report.failures.push_back(std::move(witness));
            }
        }
        observe(*ctx, report.observations);
    }
    return report;
}

const CheckTally& CampaignReport::tally(const std::string& id) const {
    const auto& registry = check_registry();
    for (std::size_t c = 0; c < registry.size(); ++c)
        if (id == registry[c].id) return tallies[c];
    throw DomainError("unknown check id: " + id);
}

std::string CampaignReport::text() const {
    const auto& registry = check_registry();
    std::ostringstream out;
    out << "verification campaign\n";
    out << "  seed " << config.seed << ", " << config.instances << " random instances, n in ["
        << config.min_n << "," << config.max_n << "], weights " << mode_str(config.weights)
        << " [" << config.weight_lo << "," << config.weight_hi << "], "
        << config.samples_per_instance << " replacement samples per instance\n";
    out << "  fixtures: "
        << (config.fixtures_only ? "only" : (config.include_fixtures ? "included" : "excluded"))
        << "\n";
    out << "  instances analyzed: " << instances_run << " (resource-capped: " << instances_capped
        << ")\n\n";
    out << "  check     pass   skip   fail  statement\n";
    for (std::size_t c = 0; c < registry.size(); ++c) {
        char line[160];
        std::snprintf(line, sizeof line, "  %-8s %6lld %6lld %6lld  %s\n", registry[c].id,
                      tallies[c].pass, tallies[c].skip, tallies[c].fail, registry[c].title);
        out << line;
    }
    out << "\nobservations\n";
    out << "  levels with an equal gap sign: " << observations.equality_levels
        << " (with unlabeled atoms: " << observations.equality_levels_with_unlabeled << ")\n";
    out << "  descend at equal-gap levels: " << observations.equality_descend_agree
        << " matched the enumeration, " << observations.equality_descend_disagree
        << " did not (no guarantee applies there)\n";
    out << "  all-exiting run bottoms realizing only part of the exit minima: "
        << observations.mixed_bottom_proper_inclusions << "\n";
    if (failures.empty()) {
        out << "\nresult: PASS (0 failures)\n";
    } else {
        out << "\nfailures (" << failures.size() << ")\n";
        for (const FailureWitness& witness : failures) {
            out << "  [" << witness.check << "] " << witness.instance
                << (witness.replayed ? " (replayed)" : " (NOT reproducible in isolation)")
                << "\n    " << witness.detail << "\n";
            std::istringstream doc(witness.graph_text);
            std::string line;
            while (std::getline(doc, line)) out << "    | " << line << "\n";
        }
        out << "\nresult: FAIL (" << failures.size() << " failures)\n";
    }
    return out.str();
}

std::string CampaignReport::machine() const {
    const auto& registry = check_registry();
    nlohmann::ordered_json doc;
    doc["campaign"] = {{"seed", config.seed},
                       {"instances", config.instances},
                       {"min_n", config.min_n},
                       {"max_n", config.max_n},
                       {"weights", mode_str(config.weights)},
                       {"weight_lo", config.weight_lo},
                       {"weight_hi", config.weight_hi},
                       {"samples_per_instance", config.samples_per_instance},
                       {"include_fixtures", config.include_fixtures},
                       {"fixtures_only", config.fixtures_only}};
    doc["instances_run"] = instances_run;
    doc["instances_capped"] = instances_capped;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < registry.size(); ++c)
        checks.push_back({{"id", registry[c].id},
                          {"kind", kind_str(registry[c].kind)},
                          {"title", registry[c].title},
                          {"pass", tallies[c].pass},
                          {"skip", tallies[c].skip},
                          {"fail", tallies[c].fail}});
    doc["checks"] = std::move(checks);
    doc["observations"] = {
        {"equality_levels", observations.equality_levels},
        {"equality_levels_with_unlabeled", observations.equality_levels_with_unlabeled},
        {"equality_descend_agree", observations.equality_descend_agree},
        {"equality_descend_disagree", observations.equality_descend_disagree},
        {"mixed_bottom_proper_inclusions", observations.mixed_bottom_proper_inclusions}};
    nlohmann::ordered_json fails = nlohmann::ordered_json::array();
    for (const FailureWitness& witness : failures)
        fails.push_back({{"check", witness.check},
                         {"instance", witness.instance},
                         {"detail", witness.detail},
                         {"graph", witness.graph_text},
                         {"sample_seed", witness.sample_seed},
                         {"replayed", witness.replayed}});
    doc["failures"] = std::move(fails);
    doc["result"] = failures.empty() ? "pass" : "fail";
    return doc.dump(2) + "\n";
}

}  // namespace minforest
