#pragma once

#include <bit>
#include <cstddef>
#include <vector>

#include "strongbond/graph.hpp"

namespace strongbond::detail {

/// Branch-and-bound over dominating sets of bounded size.
///
/// At every node the search picks the uncovered vertex whose closed
/// neighborhood has the fewest allowed candidates and branches on each
/// candidate in increasing order. A candidate tried in an earlier sibling is
/// excluded from later siblings, so every reported set is reported once.
/// With k = γ(G) the visited sets are exactly the minimum dominating sets.
class DominationSearch {
public:
    using Word = VertexSet::Word;

    explicit DominationSearch(const Graph& g);

    std::size_t order() const { return n_; }

    /// Calls `visit(const std::vector<Vertex>& chosen)` for dominating sets D
    /// with forced ⊆ D ⊆ forced ∪ allowed and |D| <= k. The visitor returns
    /// false to stop. Returns true iff some set was visited.
    template <typename Visitor>
    bool search(std::size_t k, const VertexSet& forced, const VertexSet& allowed, Visitor&& visit);

    bool search_any(std::size_t k, const VertexSet& forced, const VertexSet& allowed, std::vector<Vertex>* out);

private:
    const Word* closed(Vertex v) const { return &closed_[v * words_]; }
    Word* uncovered_at(std::size_t depth) { return &uncovered_[depth * words_]; }
    Word* allowed_at(std::size_t depth) { return &allowed_[depth * words_]; }

    std::size_t popcount_and(const Word* a, const Word* b) const {
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
        return c;
    }

    template <typename Visitor>
    void recurse(std::size_t depth, Visitor& visit);

    std::size_t n_;
    std::size_t words_;
    std::size_t limit_ = 0;
    bool stop_ = false;
    bool found_ = false;
    std::vector<Word> closed_;
    std::vector<Word> uncovered_;
    std::vector<Word> allowed_;
    std::vector<Vertex> chosen_;
};

template <typename Visitor>
bool DominationSearch::search(std::size_t k, const VertexSet& forced, const VertexSet& allowed, Visitor&& visit) {
    chosen_ = forced.members();
    stop_ = false;
    found_ = false;
    if (chosen_.size() > k) return false;
    limit_ = k;
    const std::size_t levels = k - chosen_.size() + 1;
    uncovered_.assign(levels * words_, 0);
    allowed_.assign(levels * words_, 0);

    const VertexSet everyone = VertexSet::full(n_);
    for (std::size_t w = 0; w < words_; ++w) {
        uncovered_[w] = everyone.words()[w];
        allowed_[w] = allowed.words()[w] & ~forced.words()[w];
    }
    for (Vertex f : chosen_) {
        for (std::size_t w = 0; w < words_; ++w) uncovered_[w] &= ~closed(f)[w];
    }
    recurse(0, visit);
    return found_;
}

template <typename Visitor>
void DominationSearch::recurse(std::size_t depth, Visitor& visit) {
    const Word* uncovered = uncovered_at(depth);
    const Word* allowed = allowed_at(depth);

    std::size_t uncovered_count = 0;
    for (std::size_t w = 0; w < words_; ++w) uncovered_count += static_cast<std::size_t>(std::popcount(uncovered[w]));
    if (uncovered_count == 0) {
        found_ = true;
        if (!visit(static_cast<const std::vector<Vertex>&>(chosen_))) stop_ = true;
        return;
    }
    const std::size_t remaining = limit_ - chosen_.size();
    if (remaining == 0) return;

    // Bound: no candidate can cover more than max_cover of the uncovered vertices.
    std::size_t max_cover = 0;
    for (std::size_t w = 0; w < words_; ++w) {
        Word bits = allowed[w];
        while (bits != 0) {
            const Vertex u = w * VertexSet::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
            bits &= bits - 1;
            const std::size_t c = popcount_and(closed(u), uncovered);
            if (c > max_cover) max_cover = c;
        }
    }
    if (max_cover * remaining < uncovered_count) return;

    Vertex pivot = 0;
    std::size_t pivot_options = n_ + 1;
    for (std::size_t w = 0; w < words_ && pivot_options > 1; ++w) {
        Word bits = uncovered[w];
        while (bits != 0) {
            const Vertex v = w * VertexSet::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
            bits &= bits - 1;
            const std::size_t c = popcount_and(closed(v), allowed);
            if (c < pivot_options) {
                pivot_options = c;
                pivot = v;
                if (c <= 1) break;
            }
        }
    }
    if (pivot_options == 0) return;

    Word* child_uncovered = uncovered_at(depth + 1);
    Word* child_allowed = allowed_at(depth + 1);
    std::vector<Word> sibling_allowed(allowed, allowed + words_);
    const Word* options = closed(pivot);
    for (std::size_t w = 0; w < words_; ++w) {
        Word bits = options[w] & allowed[w];
        while (bits != 0) {
            const Vertex u = w * VertexSet::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
            bits &= bits - 1;
            sibling_allowed[u / VertexSet::kWordBits] &= ~(Word{1} << (u % VertexSet::kWordBits));
            const Word* cover = closed(u);
            for (std::size_t x = 0; x < words_; ++x) {
                child_uncovered[x] = uncovered[x] & ~cover[x];
                child_allowed[x] = sibling_allowed[x];
            }
            chosen_.push_back(u);
            recurse(depth + 1, visit);
            chosen_.pop_back();
            if (stop_) return;
        }
    }
}

}  // namespace strongbond::detail
