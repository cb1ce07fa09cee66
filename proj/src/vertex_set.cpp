#include "strongbond/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace strongbond {

VertexSet::VertexSet(std::size_t width, std::initializer_list<Vertex> members)
    : VertexSet(width, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t width, std::span<const Vertex> members) : VertexSet(width) {
    for (Vertex v : members) {
        if (v >= width) throw std::out_of_range("vertex index outside set width");
        insert(v);
    }
}

VertexSet VertexSet::full(std::size_t width) {
    VertexSet s(width);
    for (auto& w : s.words_) w = ~Word{0};
    if (const std::size_t tail = width % kWordBits; tail != 0) {
        s.words_.back() = (Word{1} << tail) - 1;
    }
    return s;
}

std::size_t VertexSet::size() const {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool VertexSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::optional<Vertex> VertexSet::first() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return std::nullopt;
}

std::optional<Vertex> VertexSet::next_after(Vertex v) const {
    std::size_t start = v + 1;
    if (start >= width_) return std::nullopt;
    std::size_t w = start / kWordBits;
    Word bits = words_[w] & (~Word{0} << (start % kWordBits));
    while (true) {
        if (bits != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        if (++w == words_.size()) return std::nullopt;
        bits = words_[w];
    }
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

bool VertexSet::intersects(const VertexSet& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & other.words_[w]) != 0) return true;
    }
    return false;
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const {
    std::size_t n = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        n += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
    }
    return n;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
    return *this;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    const auto am = a.members();
    const auto bm = b.members();
    return std::lexicographical_compare(am.begin(), am.end(), bm.begin(), bm.end());
}

}  // namespace strongbond
