#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "strongbond/vertex_set.hpp"

namespace strongbond {

/// Unordered vertex pair, stored normalized with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of edges.
class EdgeSet {
public:
    EdgeSet() = default;
    EdgeSet(std::initializer_list<Edge> edges);
    explicit EdgeSet(std::vector<Edge> edges);

    /// Returns false if the edge was already present. Self-loops throw.
    bool insert(Edge e);
    bool contains(Edge e) const;
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    EdgeSet& operator|=(const EdgeSet& other);

    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }
    const std::vector<Edge>& edges() const { return edges_; }

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

private:
    std::vector<Edge> edges_;
};

/// Finite undirected simple graph on vertices 0..order-1 with bit-row adjacency.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t order);

    /// Throws std::invalid_argument on self-loops, duplicates or out-of-range endpoints.
    static Graph from_edges(std::size_t order, std::span<const Edge> edges);

    std::size_t order() const { return rows_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    bool adjacent(Vertex a, Vertex b) const { return rows_[a].contains(b); }
    bool has_edge(Edge e) const { return e.v < order() && rows_[e.u].contains(e.v); }
    const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
    VertexSet closed_neighborhood(Vertex v) const;
    std::size_t degree(Vertex v) const { return rows_[v].size(); }

    /// All edges sorted by (min endpoint, max endpoint).
    std::vector<Edge> edges() const;

    /// Returns false if the edge already exists.
    bool add_edge(Vertex a, Vertex b);
    /// Returns false if the edge did not exist.
    bool remove_edge(Vertex a, Vertex b);

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> rows_;
    std::size_t edge_count_ = 0;
};

Graph complete_graph(std::size_t m);
Graph path_graph(std::size_t n);
/// K_{1,n}: center 0, leaves 1..n.
Graph star_graph(std::size_t n);
/// Cycle on n >= 3 vertices.
Graph cycle_graph(std::size_t n);

/// G - Z. Every edge of Z must be an edge of G.
Graph remove_edges(const Graph& g, const EdgeSet& z);

struct InducedSubgraph {
    Graph graph;
    /// to_parent[i] is the vertex of the parent graph labeled i in `graph`.
    std::vector<Vertex> to_parent;
};

/// G[X], relabeled in increasing vertex order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& x);

/// True iff `e` has both endpoints in `x`.
inline bool edge_within(const Edge& e, const VertexSet& x) { return x.contains(e.u) && x.contains(e.v); }

}  // namespace strongbond
