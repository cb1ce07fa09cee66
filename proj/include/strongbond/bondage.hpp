#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "strongbond/domination.hpp"
#include "strongbond/graph.hpp"
#include "strongbond/product.hpp"

namespace strongbond {

struct BondageResult {
    std::size_t value = 0;
    /// Lexicographically first minimum bondage set over the sorted edge list.
    EdgeSet witness;
};

/// Thrown by bondage_number on an edgeless graph: γ cannot increase.
class NoBondageSet : public std::invalid_argument {
public:
    NoBondageSet() : std::invalid_argument("no bondage set exists: graph has no edges") {}
};

/// Thrown when a search hits its deadline or its subset-size cap.
class SearchBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BondageOptions {
    /// Worker threads for the size-k subset space. Output does not depend on it.
    unsigned jobs = 1;
    std::size_t enumeration_cap = kDefaultEnumerationCap;
    /// Pool size when the graph is too large to enumerate every MDS.
    std::size_t pool_limit = 64;
    /// bondage_number gives up (SearchBudgetExceeded) past this subset size.
    std::size_t max_size = std::numeric_limits<std::size_t>::max();
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Size-γ dominating sets of G used to reject candidate edge sets cheaply:
/// if any pooled set still dominates G - Z, then γ(G - Z) = γ(G).
class DominatingSetPool {
public:
    DominatingSetPool(const Graph& g, std::size_t gamma, const BondageOptions& options = {});

    /// True when the pool holds every minimum dominating set of G.
    bool complete() const { return complete_; }
    std::size_t gamma() const { return gamma_; }
    const std::vector<VertexSet>& sets() const { return sets_; }

    /// Does pooled set `index` still dominate G - Z? Z must be a subset of E(G).
    bool survives(std::size_t index, std::span<const Edge> z) const;
    /// True iff some pooled set still dominates G - Z.
    bool rejects(std::span<const Edge> z) const;
    bool rejects(const EdgeSet& z) const { return rejects(std::span<const Edge>(z.edges())); }

private:
    std::size_t gamma_;
    bool complete_;
    std::vector<VertexSet> sets_;
    /// cover_[i * order + w] = |N[w] ∩ sets_[i]|
    std::vector<std::uint16_t> cover_;
    std::size_t order_;
};

/// γ(G - Z) > γ(G). Throws std::invalid_argument if Z has a non-edge.
bool is_bondage_set(const Graph& g, const EdgeSet& z);

/// Exact b(G) by iterative deepening on |Z|. Throws NoBondageSet on edgeless graphs.
BondageResult bondage_number(const Graph& g, const BondageOptions& options = {});

/// True iff no edge set of size <= k is a bondage set of G.
bool exhaustive_no_bondage_up_to(const Graph& g, std::size_t k, const BondageOptions& options = {});

// Constructive edge sets for K_m ⊠ H, where m = idx.left_order() and the
// right-factor vertex arguments are 0-based vertices of H.

/// Z_v^-: ⌈m/2⌉ edges inside column K_m ⊠ {v} covering all its vertices.
EdgeSet z_minus(const ProductIndexing& idx, Vertex v);

/// Z_xy^|: the m rungs (u_i, x)(u_i, y).
EdgeSet z_rungs(const Graph& right_factor, const ProductIndexing& idx, Vertex x, Vertex y);

/// Z_{s0}^- ∪ Z_{s0 t0}^| for a degree-one vertex s0 of H with neighbor t0.
EdgeSet pendant_bondage_set(const Graph& right_factor, const ProductIndexing& idx, Vertex s0, Vertex t0);

}  // namespace strongbond
