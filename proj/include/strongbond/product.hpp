#pragma once

#include <cstddef>
#include <utility>

#include "strongbond/graph.hpp"

namespace strongbond {

/// Bijection (g, h) <-> g * right_order + h between product vertex pairs and
/// flat indices of a strong product G ⊠ H.
///
/// Column indices in `column`, `column_block` and `block_interior_edges` are
/// 1-based, matching the usual R_1..R_n naming of the columns over P_n. All
/// other indices are 0-based.
class ProductIndexing {
public:
    ProductIndexing(std::size_t left_order, std::size_t right_order);

    std::size_t left_order() const { return left_order_; }
    std::size_t right_order() const { return right_order_; }
    std::size_t order() const { return left_order_ * right_order_; }

    Vertex index(Vertex g, Vertex h) const { return g * right_order_ + h; }
    Vertex left(Vertex idx) const { return idx / right_order_; }
    Vertex right(Vertex idx) const { return idx % right_order_; }

    /// R_i = {(g, h_i) : all g}, 1-based column.
    VertexSet column(std::size_t i) const;

private:
    std::size_t left_order_;
    std::size_t right_order_;
};

struct StrongProduct {
    Graph graph;
    ProductIndexing indexing;
};

StrongProduct strong_product(const Graph& g, const Graph& h);

/// Vertex set of B_i^j = columns i..j, 1-based and inclusive.
VertexSet column_block(const ProductIndexing& idx, std::size_t i, std::size_t j);

/// Which column-internal edges `block_interior_edges` removes from E(B_i^j).
enum class InteriorForm {
    ExcludeBothEnds,  ///< E(B_i^j) - (E(B_i^i) ∪ E(B_j^j)); needs j - i >= 2
    ExcludeLeft,      ///< E(B_i^j) - E(B_i^i); needs j - i >= 1
    ExcludeRight,     ///< E(B_i^j) - E(B_j^j); needs j - i >= 1
};

EdgeSet block_interior_edges(const Graph& product, const ProductIndexing& idx, std::size_t i, std::size_t j,
                             InteriorForm form = InteriorForm::ExcludeBothEnds);

/// Edges of `g` with both endpoints in `x`.
EdgeSet edges_within(const Graph& g, const VertexSet& x);

}  // namespace strongbond
