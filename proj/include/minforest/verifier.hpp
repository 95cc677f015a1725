#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "minforest/atoms.hpp"
#include "minforest/growth.hpp"
#include "minforest/oracle.hpp"
#include "minforest/tree_minima.hpp"

namespace minforest {

enum class Verdict { Pass, Skip, Fail };

struct CheckOutcome {
    Verdict verdict = Verdict::Skip;
    std::string detail;  // skip reason or failure description; empty on pass
};

/// Side counts the checks record without judging; the report surfaces them so
/// behaviour the statements leave open stays visible across campaigns.
struct Observations {
    long long equality_levels = 0;  // levels whose gap matches the one below
    long long equality_levels_with_unlabeled = 0;
    long long equality_descend_agree = 0;  // descend still matches the oracle there
    long long equality_descend_disagree = 0;
    long long mixed_bottom_proper_inclusions = 0;  // exit carriers missing at the chain bottom
};

/// One graph under test: the oracle sweep plus caches for the per-level atom
/// partitions and per-subset tree minima the checks keep asking for.
class InstanceContext {
  public:
    InstanceContext(WeightedDigraph graph, std::uint64_t sample_seed, int samples_per_instance);
    InstanceContext(const InstanceContext&) = delete;
    InstanceContext& operator=(const InstanceContext&) = delete;

    const WeightedDigraph& graph() const { return graph_; }
    const ForestAtlas& atlas() const { return atlas_; }
    int n() const { return graph_.vertex_count(); }

    const AtomPartition& partition(int k);
    const TreeMinimaRecord& rooted(VertexSet d);
    const TreeMinimumSet& exit_minima(VertexSet d);
    /// Levels k = 1..N that have at least one k-forest (a suffix of 1..N).
    std::vector<int> populated_levels() const;

    std::uint64_t sample_seed() const { return sample_seed_; }
    int samples_per_instance() const { return samples_; }
    std::mt19937_64& sample_rng() { return sample_rng_; }

    Observations* observations = nullptr;

  private:
    WeightedDigraph graph_;
    ForestAtlas atlas_;
    std::uint64_t sample_seed_;
    int samples_;
    std::mt19937_64 sample_rng_;
    std::map<int, AtomPartition> partitions_;
    std::map<VertexSet, TreeMinimaRecord> rooted_;
    std::map<VertexSet, TreeMinimumSet> exit_;
};

enum class CheckKind { Property, Theorem, Construction };

struct CheckSpec {
    const char* id;     // stable registry key, e.g. "P7"
    const char* title;  // what the check verifies, in behavioural terms
    CheckKind kind;
    CheckOutcome (*run)(InstanceContext&);
};

/// Every registered statement check, in report order.
const std::vector<CheckSpec>& check_registry();
/// Registry entry by id; domain error for unknown ids.
const CheckSpec& check_by_id(const std::string& id);

enum class WeightMode { SmallInts, PowersOfTwo };

/// Reproducible test graph: every ordered pair becomes an arc with the given
/// probability. SmallInts draws weights uniformly from [lo, hi] (ties are the
/// point); PowersOfTwo assigns distinct powers of two so every weight sum is
/// unique and all minimizer sets are singletons.
WeightedDigraph random_graph(std::uint64_t seed, int n, double density, long long lo,
                             long long hi, WeightMode mode);

struct CampaignConfig {
    std::uint64_t seed = 1;
    int instances = 500;
    int min_n = 2;
    int max_n = 5;
    WeightMode weights = WeightMode::SmallInts;
    long long weight_lo = 1;
    long long weight_hi = 4;
    int samples_per_instance = 20;  // random triples for the replacement check
    bool include_fixtures = true;
    bool fixtures_only = false;
};

struct CheckTally {
    long long pass = 0;
    long long skip = 0;
    long long fail = 0;
};

struct FailureWitness {
    std::string check;
    std::string instance;    // label: fixture name or generation parameters
    std::string graph_text;  // serialized document; parse to reproduce
    std::uint64_t sample_seed = 0;
    std::string detail;
    bool replayed = false;  // rebuilt in isolation, still fails
};

struct CampaignReport {
    CampaignConfig config;
    long long instances_run = 0;
    long long instances_capped = 0;           // enumeration hit the resource cap
    std::vector<CheckTally> tallies;          // parallel to check_registry()
    std::vector<FailureWitness> failures;
    Observations observations;

    bool all_passed() const { return failures.empty(); }
    const CheckTally& tally(const std::string& id) const;
    std::string text() const;
    /// Deterministic machine-readable form: same config and seed, same bytes.
    std::string machine() const;
};

CampaignReport run_campaign(const CampaignConfig& config);

}  // namespace minforest
