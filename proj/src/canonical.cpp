#include "addpair/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "addpair/error.hpp"
#include "addpair/graph6.hpp"

namespace addpair {

namespace {

void check_canonical_order(const Graph& g) {
    if (g.order() > kCanonicalMaxOrder) {
        throw UnsupportedSize("canonical form supports order <= 8, got " + std::to_string(g.order()));
    }
}

// Upper triangle in graph6 order under perm (new vertex i is old perm[i]),
// first pair in the most significant position.
std::uint32_t triangle_code(const Graph& g, const std::array<int, kCanonicalMaxOrder>& perm) {
    const int n = g.order();
    std::uint32_t code = 0;
    for (int j = 1; j < n; ++j) {
        const VertexSet row = g.neighbors(perm[j]);
        for (int i = 0; i < j; ++i) code = (code << 1) | static_cast<std::uint32_t>(row.contains(perm[i]));
    }
    return code;
}

}  // namespace

Graph canonical_graph(const Graph& g) {
    check_canonical_order(g);
    const int n = g.order();
    std::array<int, kCanonicalMaxOrder> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    std::array<int, kCanonicalMaxOrder> best_perm = perm;
    std::uint32_t best = triangle_code(g, perm);
    while (std::next_permutation(perm.begin(), perm.begin() + n)) {
        const std::uint32_t code = triangle_code(g, perm);
        if (code < best) {
            best = code;
            best_perm = perm;
        }
    }
    std::array<int, kCanonicalMaxOrder> position{};
    for (int i = 0; i < n; ++i) position[best_perm[i]] = i;
    GraphBuilder builder(n);
    for (auto [u, v] : g.edges()) builder.add_edge(position[u], position[v]);
    return builder.build();
}

std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

bool is_isomorphic(const Graph& g, const Graph& h) {
    check_canonical_order(g);
    check_canonical_order(h);
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    std::array<int, kCanonicalMaxOrder> dg{}, dh{};
    for (int v = 0; v < g.order(); ++v) {
        dg[v] = g.degree(v);
        dh[v] = h.degree(v);
    }
    std::sort(dg.begin(), dg.begin() + g.order());
    std::sort(dh.begin(), dh.begin() + h.order());
    if (dg != dh) return false;
    return canonical_form(g) == canonical_form(h);
}

}  // namespace addpair
