#include "strongbond/domination.hpp"

#include <algorithm>
#include <string>

#include "domination_search.hpp"

namespace strongbond {

namespace detail {

DominationSearch::DominationSearch(const Graph& g)
    : n_(g.order()), words_(VertexSet::word_count(g.order())), closed_(n_ * words_, 0) {
    for (Vertex v = 0; v < n_; ++v) {
        const VertexSet row = g.closed_neighborhood(v);
        std::copy(row.words().begin(), row.words().end(), closed_.begin() + static_cast<std::ptrdiff_t>(v * words_));
    }
}

bool DominationSearch::search_any(std::size_t k, const VertexSet& forced, const VertexSet& allowed,
                                  std::vector<Vertex>* out) {
    return search(k, forced, allowed, [out](const std::vector<Vertex>& chosen) {
        if (out != nullptr) *out = chosen;
        return false;
    });
}

}  // namespace detail

namespace {

VertexSet greedy_dominating_set(const Graph& g) {
    const std::size_t n = g.order();
    VertexSet uncovered = VertexSet::full(n);
    VertexSet chosen(n);
    while (!uncovered.empty()) {
        Vertex best = 0;
        std::size_t best_cover = 0;
        for (Vertex v = 0; v < n; ++v) {
            const std::size_t c = g.closed_neighborhood(v).intersection_size(uncovered);
            if (c > best_cover) {
                best_cover = c;
                best = v;
            }
        }
        chosen.insert(best);
        uncovered -= g.closed_neighborhood(best);
    }
    return chosen;
}

VertexSet to_set(std::size_t width, const std::vector<Vertex>& members) {
    return VertexSet(width, std::span<const Vertex>(members));
}

// Builds the lexicographically least dominating set of size gamma one
// position at a time: the next element is the smallest v for which some
// minimum dominating set extends prefix + v using only vertices above v.
VertexSet lex_least_witness(detail::DominationSearch& search, std::size_t n, std::size_t gamma) {
    VertexSet prefix(n);
    Vertex start = 0;
    for (std::size_t slot = 0; slot < gamma; ++slot) {
        bool placed = false;
        for (Vertex v = start; v < n && !placed; ++v) {
            VertexSet forced = prefix;
            forced.insert(v);
            VertexSet allowed(n);
            for (Vertex u = v + 1; u < n; ++u) allowed.insert(u);
            if (search.search_any(gamma, forced, allowed, nullptr)) {
                prefix = forced;
                start = v + 1;
                placed = true;
            }
        }
        if (!placed) break;
    }
    return prefix;
}

}  // namespace

EnumerationCapExceeded::EnumerationCapExceeded(std::size_t order, std::size_t cap)
    : std::runtime_error("graph order " + std::to_string(order) + " exceeds enumeration cap " + std::to_string(cap)) {}

bool is_dominating(const Graph& g, const VertexSet& d) {
    VertexSet covered(g.order());
    d.for_each([&](Vertex v) { covered |= g.closed_neighborhood(v); });
    return covered == VertexSet::full(g.order());
}

std::optional<VertexSet> find_dominating_set(const Graph& g, std::size_t k) {
    detail::DominationSearch search(g);
    std::vector<Vertex> found;
    if (!search.search_any(k, VertexSet(g.order()), VertexSet::full(g.order()), &found)) return std::nullopt;
    return to_set(g.order(), found);
}

GammaResult domination_number(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("domination number of the empty graph");
    const std::size_t n = g.order();
    detail::DominationSearch search(g);
    const VertexSet none(n);
    const VertexSet all = VertexSet::full(n);

    std::size_t incumbent = greedy_dominating_set(g).size();
    std::vector<Vertex> found;
    while (incumbent > 1 && search.search_any(incumbent - 1, none, all, &found)) incumbent = found.size();

    GammaResult result;
    result.value = incumbent;
    result.witness = lex_least_witness(search, n, incumbent);
    return result;
}

std::vector<VertexSet> enumerate_min_dominating_sets(const Graph& g, std::size_t cap) {
    if (g.order() > cap) throw EnumerationCapExceeded(g.order(), cap);
    const std::size_t gamma = domination_number(g).value;
    auto sets = collect_min_dominating_sets(g, gamma, static_cast<std::size_t>(-1));
    std::sort(sets.begin(), sets.end(), lex_less);
    return sets;
}

std::vector<VertexSet> collect_min_dominating_sets(const Graph& g, std::size_t gamma, std::size_t limit) {
    std::vector<VertexSet> out;
    if (limit == 0) return out;
    const std::size_t n = g.order();
    detail::DominationSearch search(g);
    search.search(gamma, VertexSet(n), VertexSet::full(n), [&](const std::vector<Vertex>& chosen) {
        if (chosen.size() == gamma) out.push_back(to_set(n, chosen));
        return out.size() < limit;
    });
    return out;
}

namespace {

class PackingSearch {
public:
    PackingSearch(const Graph& g) : n_(g.order()) {
        // Vertices within distance 2 of v: N[v] expanded once more.
        for (Vertex v = 0; v < n_; ++v) {
            VertexSet reach = g.closed_neighborhood(v);
            g.neighbors(v).for_each([&](Vertex u) { reach |= g.closed_neighborhood(u); });
            conflicts_.push_back(std::move(reach));
        }
        best_ = VertexSet(n_);
    }

    PackingResult run() {
        VertexSet chosen(n_);
        recurse(chosen, VertexSet::full(n_));
        return {best_.size(), best_};
    }

private:
    void recurse(VertexSet& chosen, VertexSet candidates) {
        if (chosen.size() + candidates.size() <= best_.size()) return;
        const auto v = candidates.first();
        if (!v) {
            best_ = chosen;
            return;
        }
        candidates.erase(*v);
        chosen.insert(*v);
        recurse(chosen, candidates - conflicts_[*v]);
        chosen.erase(*v);
        recurse(chosen, candidates);
    }

    std::size_t n_;
    std::vector<VertexSet> conflicts_;
    VertexSet best_;
};

}  // namespace

PackingResult two_packing_number(const Graph& g, std::size_t cap) {
    if (g.order() == 0) throw std::invalid_argument("2-packing of the empty graph");
    if (g.order() > cap) throw EnumerationCapExceeded(g.order(), cap);
    return PackingSearch(g).run();
}

}  // namespace strongbond
