#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "strongbond/graph.hpp"

namespace strongbond {

/// Largest order for which exhaustive MDS / packing enumeration is attempted.
inline constexpr std::size_t kDefaultEnumerationCap = 24;

class EnumerationCapExceeded : public std::runtime_error {
public:
    EnumerationCapExceeded(std::size_t order, std::size_t cap);
};

struct GammaResult {
    std::size_t value = 0;
    /// Lexicographically least minimum dominating set.
    VertexSet witness;
};

struct PackingResult {
    std::size_t value = 0;
    VertexSet witness;
};

bool is_dominating(const Graph& g, const VertexSet& d);

/// Exact γ(G). Throws std::invalid_argument on the empty graph.
GammaResult domination_number(const Graph& g);

/// A dominating set of size at most k, if one exists.
std::optional<VertexSet> find_dominating_set(const Graph& g, std::size_t k);

/// Every minimum dominating set, sorted lexicographically.
/// Throws EnumerationCapExceeded when g.order() > cap.
std::vector<VertexSet> enumerate_min_dominating_sets(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

/// Up to `limit` distinct dominating sets of size `gamma` (which must be γ(G)),
/// in search order. No order cap; used where full enumeration is refused.
std::vector<VertexSet> collect_min_dominating_sets(const Graph& g, std::size_t gamma, std::size_t limit);

/// Exact maximum 2-packing (pairwise distance > 2).
PackingResult two_packing_number(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

}  // namespace strongbond
