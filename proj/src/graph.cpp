#include "strongbond/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace strongbond {

EdgeSet::EdgeSet(std::initializer_list<Edge> edges) {
    for (const Edge& e : edges) insert(e);
}

EdgeSet::EdgeSet(std::vector<Edge> edges) {
    for (const Edge& e : edges) insert(e);
}

bool EdgeSet::insert(Edge e) {
    if (e.u == e.v) throw std::invalid_argument("edge set cannot contain a self-loop");
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return false;
    edges_.insert(it, e);
    return true;
}

bool EdgeSet::contains(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

EdgeSet& EdgeSet::operator|=(const EdgeSet& other) {
    for (const Edge& e : other) insert(e);
    return *this;
}

Graph::Graph(std::size_t order) : rows_(order, VertexSet(order)) {}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
    Graph g(order);
    for (const Edge& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.v >= order) throw std::invalid_argument("edge endpoint out of range");
        if (!g.add_edge(e.u, e.v)) {
            throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
        }
    }
    return g;
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
    VertexSet s = rows_[v];
    s.insert(v);
    return s;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        auto next = rows_[u].next_after(u);
        while (next) {
            out.emplace_back(u, *next);
            next = rows_[u].next_after(*next);
        }
    }
    return out;
}

bool Graph::add_edge(Vertex a, Vertex b) {
    if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    if (a >= order() || b >= order()) throw std::out_of_range("edge endpoint out of range");
    if (rows_[a].contains(b)) return false;
    rows_[a].insert(b);
    rows_[b].insert(a);
    ++edge_count_;
    return true;
}

bool Graph::remove_edge(Vertex a, Vertex b) {
    if (a >= order() || b >= order() || !rows_[a].contains(b)) return false;
    rows_[a].erase(b);
    rows_[b].erase(a);
    --edge_count_;
    return true;
}

Graph complete_graph(std::size_t m) {
    if (m == 0) throw std::invalid_argument("complete_graph requires m >= 1");
    Graph g(m);
    for (Vertex a = 0; a < m; ++a) {
        for (Vertex b = a + 1; b < m; ++b) g.add_edge(a, b);
    }
    return g;
}

Graph path_graph(std::size_t n) {
    if (n == 0) throw std::invalid_argument("path_graph requires n >= 1");
    Graph g(n);
    for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph star_graph(std::size_t n) {
    Graph g(n + 1);
    for (Vertex leaf = 1; leaf <= n; ++leaf) g.add_edge(0, leaf);
    return g;
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle_graph requires n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph remove_edges(const Graph& g, const EdgeSet& z) {
    Graph out = g;
    for (const Edge& e : z) {
        if (!out.remove_edge(e.u, e.v)) {
            throw std::invalid_argument("cannot remove non-edge {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "}");
        }
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x) {
    if (x.empty()) throw std::invalid_argument("induced subgraph of an empty vertex set");
    if (x.width() != g.order()) throw std::invalid_argument("vertex set width does not match graph order");
    InducedSubgraph sub;
    sub.to_parent = x.members();
    const std::size_t k = sub.to_parent.size();
    sub.graph = Graph(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (g.adjacent(sub.to_parent[i], sub.to_parent[j])) sub.graph.add_edge(i, j);
        }
    }
    return sub;
}

}  // namespace strongbond
