#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "strongbond/domination.hpp"
#include "strongbond/instance.hpp"
#include "strongbond/report.hpp"

namespace strongbond {

struct VerifyConfig {
    /// Largest edge-subset size any bondage search may enumerate.
    std::size_t max_size = 8;
    /// Per-instance wall-clock budget; 0 means unlimited.
    std::size_t budget_seconds = 0;
    /// Instances run concurrently by `sweep`. Never affects report content.
    unsigned jobs = 1;
    /// Threads inside one bondage search (single-instance commands).
    unsigned search_jobs = 1;
    /// Always run the full bondage search instead of witness + refutation.
    bool full_search = false;
    std::size_t enumeration_cap = kDefaultEnumerationCap;
    std::optional<std::uint64_t> seed;
};

/// Closed-form value for the instance, if one is known.
std::optional<std::size_t> formula_for(const InstanceSpec& spec, Quantity quantity);

/// Bondage set prescribed for the family (K_m ⊠ P_n and uniform-residue
/// K_m ⊠ S with m >= 2), if any.
std::optional<EdgeSet> constructive_bondage_set(const InstanceSpec& spec, const BuiltInstance& built);

/// γ: exact solver against the formula. Bondage: for oracle families with a
/// constructive set, the set is checked with is_bondage_set and every edge set
/// of size formula - 1 is refuted; otherwise bondage_number runs. Failures and
/// budget overruns become entries, never exceptions.
ReportEntry verify_instance(const InstanceSpec& spec, Quantity quantity, const VerifyConfig& config);

struct SweepRanges {
    Family family = Family::KmPn;
    Quantity quantity = Quantity::Gamma;
    std::vector<std::size_t> m_values;
    std::vector<std::size_t> n_values;
    /// km-starlike: every multiset of lengths from `branch_lengths` with a
    /// branch count from `branch_counts`.
    std::vector<std::size_t> branch_counts;
    std::vector<std::size_t> branch_lengths;
};

/// Instances of the ranges, sorted by parameters. Throws std::invalid_argument
/// when the ranges are empty.
std::vector<InstanceSpec> expand_ranges(const SweepRanges& ranges);

Report sweep(const SweepRanges& ranges, const VerifyConfig& config);
Report sweep(std::vector<InstanceSpec> instances, Quantity quantity, const VerifyConfig& config);

/// Report config echo for `config` (excludes `jobs`).
std::vector<std::pair<std::string, std::string>> config_echo(const VerifyConfig& config);

struct MdsViolation {
    std::string lemma;
    std::string detail;
    std::vector<Vertex> mds;
};

struct MdsStructureReport {
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t gamma = 0;
    std::size_t mds_count = 0;
    std::vector<MdsViolation> violations;

    bool passed() const { return violations.empty() && mds_count > 0; }
    std::string to_json() const;
};

/// Enumerates every MDS of K_m ⊠ P_n and checks the column lemmas on each:
/// at most one vertex per column, exactly one in each end column pair,
/// prefix/suffix block bounds, and the residue-forced empty columns.
MdsStructureReport check_mds_structure(std::size_t m, std::size_t n, std::size_t cap = kDefaultEnumerationCap);

// Randomized property suites.

enum class BlockLemma { ThreeColumn, TwoColumn, Star };

struct BlockLemmaOutcome {
    BlockLemma lemma = BlockLemma::ThreeColumn;
    std::size_t trials = 0;
    std::size_t counterexamples = 0;
    std::vector<std::string> examples;
};

/// Draws random Z whose intersection with the lemma's E* stays below ⌈m/2⌉
/// (m ∈ {2,3,4}) and checks that γ of the damaged block is still 1.
BlockLemmaOutcome run_block_lemma_trials(BlockLemma lemma, std::size_t trials, std::mt19937_64& rng);

std::string_view to_string(BlockLemma lemma);

/// Uniform labeled tree on n vertices from a random Prüfer sequence.
Graph random_tree(std::size_t n, std::mt19937_64& rng);
/// G(n, p).
Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);

}  // namespace strongbond
