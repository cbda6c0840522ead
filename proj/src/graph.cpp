#include "addpair/graph.hpp"

#include <string>

#include "addpair/error.hpp"

namespace addpair {

namespace {

void check_order(int n) {
    if (n < 0 || n > kMaxVertices) {
        throw UnsupportedSize("graph order " + std::to_string(n) + " outside [0, 64]");
    }
}

}  // namespace

Graph::Graph(int n) {
    check_order(n);
    n_ = n;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    GraphBuilder builder(n);
    for (auto [u, v] : edges) builder.add_edge(u, v);
    return builder.build();
}

Graph Graph::from_rows(int n, std::span<const std::uint64_t> rows) {
    check_order(n);
    if (rows.size() != static_cast<std::size_t>(n)) {
        throw InputError("expected " + std::to_string(n) + " adjacency rows, got " +
                         std::to_string(rows.size()));
    }
    Graph g(n);
    const std::uint64_t allowed = VertexSet::range(n).bits();
    for (int v = 0; v < n; ++v) {
        if (rows[v] & ~allowed) throw InputError("row " + std::to_string(v) + " has bits >= n");
        if ((rows[v] >> v) & 1U) throw InputError("loop at vertex " + std::to_string(v));
        g.adj_[v] = rows[v];
    }
    for (int v = 0; v < n; ++v) {
        for (int u : VertexSet{rows[v]}) {
            if (!((rows[u] >> v) & 1U)) {
                throw InputError("asymmetric adjacency between " + std::to_string(u) + " and " +
                                 std::to_string(v));
            }
        }
    }
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
        for (int v : neighbors(u).above(u)) out.emplace_back(u, v);
    }
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    GraphBuilder builder(*this);
    builder.add_edge(u, v);
    return builder.build();
}

Graph Graph::without_edge(int u, int v) const {
    GraphBuilder builder(*this);
    builder.remove_edge(u, v);
    return builder.build();
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v) {
        if (a.adj_[v] != b.adj_[v]) return false;
    }
    return true;
}

GraphBuilder::GraphBuilder(int n) : graph_(n) {}

void GraphBuilder::check_pair(int u, int v) const {
    const int n = graph_.n_;
    if (u < 0 || v < 0 || u >= n || v >= n) {
        throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") outside a graph of order " + std::to_string(n));
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
    check_pair(u, v);
    graph_.adj_[u] |= std::uint64_t{1} << v;
    graph_.adj_[v] |= std::uint64_t{1} << u;
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v) {
    check_pair(u, v);
    graph_.adj_[u] &= ~(std::uint64_t{1} << v);
    graph_.adj_[v] &= ~(std::uint64_t{1} << u);
    return *this;
}

Graph complete(int n) { return complement(edgeless(n)); }

Graph edgeless(int n) { return Graph(n); }

Graph cycle(int k) {
    if (k < 3) throw InputError("cycle needs at least 3 vertices, got " + std::to_string(k));
    GraphBuilder builder(k);
    for (int i = 0; i < k; ++i) builder.add_edge(i, (i + 1) % k);
    return builder.build();
}

Graph complement(const Graph& g) {
    const int n = g.order();
    std::array<std::uint64_t, kMaxVertices> rows{};
    const VertexSet all = g.vertices();
    for (int v = 0; v < n; ++v) rows[v] = (all - g.neighbors(v)).without(v).bits();
    return Graph::from_rows(n, std::span<const std::uint64_t>(rows.data(), n));
}

InducedSubgraph induced(const Graph& g, VertexSet x) {
    require_subset(g, x, "induced");
    const int n = g.order();
    InducedSubgraph out;
    out.old_to_new.assign(n, -1);
    out.new_to_old = x.to_vector();
    for (std::size_t i = 0; i < out.new_to_old.size(); ++i) {
        out.old_to_new[out.new_to_old[i]] = static_cast<int>(i);
    }
    GraphBuilder builder(x.size());
    for (std::size_t i = 0; i < out.new_to_old.size(); ++i) {
        const int u = out.new_to_old[i];
        for (int v : (g.neighbors(u) & x).above(u)) builder.add_edge(static_cast<int>(i), out.old_to_new[v]);
    }
    out.graph = builder.build();
    return out;
}

Graph union_graph(const Graph& b, const Graph& r) {
    require_same_order(b, r, "union_graph");
    const int n = b.order();
    std::array<std::uint64_t, kMaxVertices> rows{};
    for (int v = 0; v < n; ++v) rows[v] = (b.neighbors(v) | r.neighbors(v)).bits();
    return Graph::from_rows(n, std::span<const std::uint64_t>(rows.data(), n));
}

Graph difference(const Graph& b, const Graph& r) {
    require_same_order(b, r, "difference");
    const int n = b.order();
    std::array<std::uint64_t, kMaxVertices> rows{};
    for (int v = 0; v < n; ++v) rows[v] = (b.neighbors(v) - r.neighbors(v)).bits();
    return Graph::from_rows(n, std::span<const std::uint64_t>(rows.data(), n));
}

namespace {

void check_disjoint_sides(const Graph& g, VertexSet x, VertexSet y) {
    require_subset(g, x, "x");
    require_subset(g, y, "y");
    if (x.intersects(y)) throw InputError("sets overlap on " + (x & y).to_string());
}

}  // namespace

bool is_complete_between(const Graph& g, VertexSet x, VertexSet y) {
    check_disjoint_sides(g, x, y);
    for (int v : x) {
        if (!y.subset_of(g.neighbors(v))) return false;
    }
    return true;
}

bool is_anticomplete_between(const Graph& g, VertexSet x, VertexSet y) {
    check_disjoint_sides(g, x, y);
    for (int v : x) {
        if (g.neighbors(v).intersects(y)) return false;
    }
    return true;
}

void require_subset(const Graph& g, VertexSet x, const char* what) {
    if (!x.subset_of(g.vertices())) {
        throw InputError(std::string(what) + ": vertex set " + x.to_string() +
                         " is not inside a graph of order " + std::to_string(g.order()));
    }
}

void require_same_order(const Graph& b, const Graph& r, const char* what) {
    if (b.order() != r.order()) {
        throw InputError(std::string(what) + ": graphs have different orders (" +
                         std::to_string(b.order()) + " vs " + std::to_string(r.order()) + ")");
    }
}

}  // namespace addpair
