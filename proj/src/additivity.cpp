#include "addpair/additivity.hpp"

#include <string>

#include "addpair/cliques.hpp"
#include "addpair/error.hpp"

namespace addpair {

namespace {

void check_pair(const Graph& b, const Graph& r, const char* what, int max_order) {
    require_same_order(b, r, what);
    if (b.order() > max_order) {
        throw UnsupportedSize(std::string(what) + " supports order <= " + std::to_string(max_order) + ", got " +
                              std::to_string(b.order()));
    }
}

// Searches B-cliques C inside x (extending `chosen` by vertices of
// `candidates`) for one whose remainder x \ C is an R-clique.
bool split_search(const Graph& b, const Graph& r, VertexSet x, VertexSet chosen, VertexSet candidates) {
    if (is_clique(r, x - chosen)) return true;
    for (int v : candidates) {
        if (split_search(b, r, x, chosen.with(v), b.neighbors(v) & candidates.above(v))) return true;
    }
    return false;
}

}  // namespace

std::optional<Witness> find_min_witness(const Graph& b, const Graph& r, ScanMode mode) {
    check_pair(b, r, "find_min_witness", kAdditivityMaxOrder);
    const Graph g = union_graph(b, r);
    const int omega_g = omega_induced(g, g.vertices());
    const int start = mode == ScanMode::kFromFloor ? kWitnessFloor : 1;

    std::optional<Witness> found;
    for (int k = start; k <= omega_g && !found; ++k) {
        for_each_clique_of_size(g, g.vertices(), k, [&](VertexSet x) {
            const int wb = omega_induced(b, x);
            const int wr = omega_induced(r, x);
            if (wb + wr >= k) return true;
            found = Witness{x, wb, wr, k - wb - wr};
            return false;
        });
    }
    return found;
}

bool is_additive(const Graph& b, const Graph& r) { return !find_min_witness(b, r).has_value(); }

bool is_additive_by_definition(const Graph& b, const Graph& r) {
    check_pair(b, r, "is_additive_by_definition", kDefinitionCheckMaxOrder);
    const Graph g = union_graph(b, r);
    const std::uint64_t limit = std::uint64_t{1} << b.order();
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        const VertexSet x{bits};
        if (omega_induced(b, x) + omega_induced(r, x) < omega_induced(g, x)) return false;
    }
    return true;
}

bool splits_into_cliques(const Graph& b, const Graph& r, VertexSet x) {
    require_same_order(b, r, "splits_into_cliques");
    require_subset(b, x, "splits_into_cliques");
    return split_search(b, r, x, VertexSet{}, x);
}

std::optional<VertexSet> union_decomposable(const Graph& b, const Graph& r) {
    check_pair(b, r, "union_decomposable", kAdditivityMaxOrder);
    const Graph g = union_graph(b, r);
    const int omega_g = omega_induced(g, g.vertices());
    std::optional<VertexSet> found;
    for (int k = 1; k <= omega_g && !found; ++k) {
        for_each_clique_of_size(g, g.vertices(), k, [&](VertexSet x) {
            if (splits_into_cliques(b, r, x)) return true;
            found = x;
            return false;
        });
    }
    return found;
}

}  // namespace addpair
