#include "strongbond/starlike.hpp"

#include <numeric>
#include <stdexcept>

namespace strongbond {

StarlikeSpec::StarlikeSpec(std::vector<std::size_t> branches) : branches_(std::move(branches)) {
    if (branches_.empty()) throw std::invalid_argument("starlike tree needs at least one branch");
    for (std::size_t n : branches_) {
        if (n == 0) throw std::invalid_argument("starlike branch lengths must be positive");
    }
}

std::size_t StarlikeSpec::branch_length(std::size_t i) const {
    if (i < 1 || i > branches_.size()) throw std::out_of_range("branch index out of range");
    return branches_[i - 1];
}

std::size_t StarlikeSpec::order() const {
    return 1 + std::accumulate(branches_.begin(), branches_.end(), std::size_t{0});
}

Vertex StarlikeSpec::branch_vertex(std::size_t i, std::size_t j) const {
    if (j < 1 || j > branch_length(i)) throw std::out_of_range("branch position out of range");
    Vertex offset = 1;
    for (std::size_t p = 0; p + 1 < i; ++p) offset += branches_[p];
    return offset + j - 1;
}

std::string StarlikeSpec::to_string() const {
    std::string s = "S(";
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(branches_[i]);
    }
    return s + ')';
}

Graph starlike_tree(const StarlikeSpec& spec) {
    Graph g(spec.order());
    for (std::size_t i = 1; i <= spec.branch_count(); ++i) {
        Vertex prev = StarlikeSpec::center();
        for (std::size_t j = 1; j <= spec.branch_length(i); ++j) {
            const Vertex x = spec.branch_vertex(i, j);
            g.add_edge(prev, x);
            prev = x;
        }
    }
    return g;
}

}  // namespace strongbond
