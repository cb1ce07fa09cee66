#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace strongbond {

using Vertex = std::size_t;

/// Fixed-width bit row over the vertices 0..width-1 of a graph.
///
/// Used both for adjacency rows and for vertex subsets (dominating sets,
/// packings, column blocks). Bits past `width` are always zero.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t width) : width_(width), words_(word_count(width), 0) {}
    VertexSet(std::size_t width, std::initializer_list<Vertex> members);
    VertexSet(std::size_t width, std::span<const Vertex> members);

    static VertexSet full(std::size_t width);

    static constexpr std::size_t word_count(std::size_t width) {
        return (width + kWordBits - 1) / kWordBits;
    }

    std::size_t width() const { return width_; }

    bool contains(Vertex v) const { return (words_[v / kWordBits] >> (v % kWordBits)) & 1U; }
    void insert(Vertex v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
    void erase(Vertex v) { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

    std::size_t size() const;
    bool empty() const;

    /// Smallest member, if any.
    std::optional<Vertex> first() const;
    /// Smallest member strictly greater than `v`, if any.
    std::optional<Vertex> next_after(Vertex v) const;

    /// Members in increasing order.
    std::vector<Vertex> members() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits != 0) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
                f(w * kWordBits + bit);
                bits &= bits - 1;
            }
        }
    }

    bool intersects(const VertexSet& other) const;
    std::size_t intersection_size(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    /// Set difference.
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    std::span<const Word> words() const { return words_; }

private:
    std::size_t width_ = 0;
    std::vector<Word> words_;
};

/// Lexicographic order on the sorted member sequences.
bool lex_less(const VertexSet& a, const VertexSet& b);

}  // namespace strongbond
