#include "strongbond/product.hpp"

#include <stdexcept>

namespace strongbond {

ProductIndexing::ProductIndexing(std::size_t left_order, std::size_t right_order)
    : left_order_(left_order), right_order_(right_order) {
    if (left_order == 0 || right_order == 0) throw std::invalid_argument("product factor has no vertices");
}

VertexSet ProductIndexing::column(std::size_t i) const {
    if (i < 1 || i > right_order_) throw std::out_of_range("column index out of range");
    VertexSet s(order());
    for (Vertex g = 0; g < left_order_; ++g) s.insert(index(g, i - 1));
    return s;
}

StrongProduct strong_product(const Graph& g, const Graph& h) {
    if (g.order() == 0 || h.order() == 0) throw std::invalid_argument("strong product of an empty graph");
    ProductIndexing idx(g.order(), h.order());
    Graph p(idx.order());
    // (g1,h1) ~ (g2,h2) iff each coordinate is equal or adjacent, not both equal.
    for (Vertex a = 0; a < idx.order(); ++a) {
        const Vertex ga = idx.left(a);
        const Vertex ha = idx.right(a);
        for (Vertex b = a + 1; b < idx.order(); ++b) {
            const Vertex gb = idx.left(b);
            const Vertex hb = idx.right(b);
            const bool g_ok = ga == gb || g.adjacent(ga, gb);
            const bool h_ok = ha == hb || h.adjacent(ha, hb);
            if (g_ok && h_ok) p.add_edge(a, b);
        }
    }
    return {std::move(p), idx};
}

VertexSet column_block(const ProductIndexing& idx, std::size_t i, std::size_t j) {
    if (i > j) throw std::invalid_argument("column_block requires i <= j");
    if (i < 1 || j > idx.right_order()) throw std::out_of_range("column_block range outside 1..n");
    VertexSet s(idx.order());
    for (std::size_t c = i; c <= j; ++c) s |= idx.column(c);
    return s;
}

EdgeSet edges_within(const Graph& g, const VertexSet& x) {
    EdgeSet out;
    for (const Edge& e : g.edges()) {
        if (edge_within(e, x)) out.insert(e);
    }
    return out;
}

EdgeSet block_interior_edges(const Graph& product, const ProductIndexing& idx, std::size_t i, std::size_t j,
                             InteriorForm form) {
    if (product.order() != idx.order()) throw std::invalid_argument("indexing does not match product graph");
    const std::size_t needed = form == InteriorForm::ExcludeBothEnds ? 2 : 1;
    if (i > j || j - i < needed) throw std::invalid_argument("column range too small for requested interior form");
    const VertexSet block = column_block(idx, i, j);
    const VertexSet left = idx.column(i);
    const VertexSet right = idx.column(j);
    const bool drop_left = form != InteriorForm::ExcludeRight;
    const bool drop_right = form != InteriorForm::ExcludeLeft;

    EdgeSet out;
    for (const Edge& e : product.edges()) {
        if (!edge_within(e, block)) continue;
        if (drop_left && edge_within(e, left)) continue;
        if (drop_right && edge_within(e, right)) continue;
        out.insert(e);
    }
    return out;
}

}  // namespace strongbond
