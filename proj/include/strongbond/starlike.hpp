#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "strongbond/graph.hpp"

namespace strongbond {

/// Branch lengths (n_1, ..., n_l) of a starlike tree S(n_1, ..., n_l).
///
/// Labeling: the center is vertex 0; branch i (1-based) occupies the next n_i
/// indices in declaration order, starting with x^i_1, the neighbor of the center.
class StarlikeSpec {
public:
    /// Throws std::invalid_argument if `branches` is empty or contains a zero.
    explicit StarlikeSpec(std::vector<std::size_t> branches);

    const std::vector<std::size_t>& branches() const { return branches_; }
    std::size_t branch_count() const { return branches_.size(); }
    std::size_t branch_length(std::size_t i) const;
    std::size_t order() const;

    static constexpr Vertex center() { return 0; }
    /// Vertex x^i_j, both indices 1-based.
    Vertex branch_vertex(std::size_t i, std::size_t j) const;

    /// "S(a,b,c)"
    std::string to_string() const;

    friend bool operator==(const StarlikeSpec&, const StarlikeSpec&) = default;

private:
    std::vector<std::size_t> branches_;
};

Graph starlike_tree(const StarlikeSpec& spec);

}  // namespace strongbond
