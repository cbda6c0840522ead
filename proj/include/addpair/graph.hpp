#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "addpair/vertex_set.hpp"

namespace addpair {

using Edge = std::pair<int, int>;

/// Simple undirected graph on at most 64 vertices; adjacency rows are
/// bitmasks. Values are immutable once built.
class Graph {
public:
    /// The graph on zero vertices.
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }
    /// Validates symmetry, looplessness and that no bit >= n is set.
    static Graph from_rows(int n, std::span<const std::uint64_t> rows);

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::range(n_); }
    VertexSet neighbors(int v) const { return VertexSet{adj_[v]}; }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
    int degree(int v) const { return neighbors(v).size(); }
    int edge_count() const;
    /// Edges (u, v) with u < v, ordered by u then v.
    std::vector<Edge> edges() const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    friend class GraphBuilder;

    int n_ = 0;
    std::array<std::uint64_t, kMaxVertices> adj_{};
};

/// Mutable staging area for building a Graph edge by edge.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    explicit GraphBuilder(const Graph& start) : graph_(start) {}

    GraphBuilder& add_edge(int u, int v);
    GraphBuilder& remove_edge(int u, int v);
    Graph build() const { return graph_; }

private:
    void check_pair(int u, int v) const;

    Graph graph_;
};

Graph complete(int n);
Graph edgeless(int n);
/// Cycle 0-1-...-(k-1)-0; requires k >= 3.
Graph cycle(int k);

Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    /// old_to_new[v] is the new index of v, or -1 when v was dropped.
    std::vector<int> old_to_new;
    std::vector<int> new_to_old;
};

/// Subgraph induced on x, vertices renumbered in ascending original order.
InducedSubgraph induced(const Graph& g, VertexSet x);

/// Edge-set union of two graphs on the same vertex set.
Graph union_graph(const Graph& b, const Graph& r);
/// Edges of b that are not edges of r.
Graph difference(const Graph& b, const Graph& r);

bool is_complete_between(const Graph& g, VertexSet x, VertexSet y);
bool is_anticomplete_between(const Graph& g, VertexSet x, VertexSet y);

/// Throws InputError unless x only uses vertices of g.
void require_subset(const Graph& g, VertexSet x, const char* what);
/// Throws InputError unless the two graphs have the same order.
void require_same_order(const Graph& b, const Graph& r, const char* what);

}  // namespace addpair
