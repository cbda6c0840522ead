#include "addpair/cliques.hpp"

#include <array>
#include <string>

#include "addpair/error.hpp"

namespace addpair {

namespace {

// Greedy sequential colouring of p; the number of colour classes bounds the
// clique number of g[p] from above.
int colour_bound(const Graph& g, VertexSet p) {
    int colours = 0;
    while (!p.empty()) {
        ++colours;
        VertexSet uncoloured = p;
        while (!uncoloured.empty()) {
            const int v = uncoloured.lowest();
            p = p.without(v);
            uncoloured = uncoloured.without(v) - g.neighbors(v);
        }
    }
    return colours;
}

// Branches on candidates in ascending order so cliques are met in
// lexicographic order; the incumbent only changes on strict improvement,
// which makes the first maximum clique found the lexicographically least.
struct BranchAndBound {
    const Graph& g;
    int best_size = 0;
    VertexSet best;

    void expand(VertexSet current, int current_size, VertexSet candidates) {
        if (current_size > best_size) {
            best_size = current_size;
            best = current;
        }
        if (candidates.empty()) return;
        if (current_size + candidates.size() <= best_size) return;
        if (current_size + colour_bound(g, candidates) <= best_size) return;
        for (int v : candidates) {
            const VertexSet next = g.neighbors(v) & candidates.above(v);
            if (current_size + 1 + next.size() <= best_size) continue;
            expand(current.with(v), current_size + 1, next);
        }
    }
};

// Size-only variant for omega_induced; no witness bookkeeping.
int omega_bound_search(const Graph& g, VertexSet candidates, int current_size, int best) {
    if (current_size > best) best = current_size;
    if (candidates.empty() || current_size + candidates.size() <= best) return best;
    if (current_size + colour_bound(g, candidates) <= best) return best;
    for (int v : candidates) {
        const VertexSet next = g.neighbors(v) & candidates.above(v);
        if (current_size + 1 + next.size() <= best) continue;
        best = omega_bound_search(g, next, current_size + 1, best);
    }
    return best;
}

bool cliques_of_size(const Graph& g, VertexSet current, int remaining, VertexSet candidates,
                     const std::function<bool(VertexSet)>& visit) {
    if (remaining == 0) return visit(current);
    for (int v : candidates) {
        const VertexSet rest = candidates.above(v);
        if (rest.size() + 1 < remaining) break;
        if (!cliques_of_size(g, current.with(v), remaining - 1, g.neighbors(v) & rest, visit)) return false;
    }
    return true;
}

}  // namespace

bool is_clique(const Graph& g, VertexSet x) {
    for (int v : x) {
        if (!x.without(v).subset_of(g.neighbors(v))) return false;
    }
    return true;
}

CliqueResult max_clique(const Graph& g) {
    BranchAndBound search{g, 0, VertexSet{}};
    search.expand(VertexSet{}, 0, g.vertices());
    return {search.best_size, search.best};
}

CliqueResult max_clique_by_subset_scan(const Graph& g) {
    if (g.order() > kSubsetScanMaxOrder) {
        throw UnsupportedSize("subset scan supports order <= 20, got " + std::to_string(g.order()));
    }
    CliqueResult best;
    const std::uint64_t limit = std::uint64_t{1} << g.order();
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        const VertexSet x{bits};
        const int size = x.size();
        if (size < best.size) continue;
        if (!is_clique(g, x)) continue;
        if (size > best.size || lex_less(x, best.members)) best = {size, x};
    }
    return best;
}

int omega_induced(const Graph& g, VertexSet x) {
    require_subset(g, x, "omega_induced");
    return omega_bound_search(g, x, 0, 0);
}

bool for_each_clique_of_size(const Graph& g, VertexSet within, int k,
                             const std::function<bool(VertexSet)>& visit) {
    require_subset(g, within, "for_each_clique_of_size");
    if (k < 0) return true;
    return cliques_of_size(g, VertexSet{}, k, within, visit);
}

std::vector<VertexSet> enumerate_cliques(const Graph& g) {
    if (g.order() > kEnumerateMaxOrder) {
        throw UnsupportedSize("clique enumeration supports order <= 24, got " + std::to_string(g.order()));
    }
    std::vector<VertexSet> out;
    std::vector<VertexSet> level;
    for (int v = 0; v < g.order(); ++v) level.push_back(VertexSet::single(v));
    // Extending each lexicographically ordered k-clique by larger vertices in
    // ascending order yields the (k+1)-cliques in lexicographic order.
    while (!level.empty()) {
        out.insert(out.end(), level.begin(), level.end());
        std::vector<VertexSet> next;
        for (VertexSet c : level) {
            VertexSet common = g.vertices().above(c.highest());
            for (int v : c) common = common & g.neighbors(v);
            for (int v : common) next.push_back(c.with(v));
        }
        level = std::move(next);
    }
    return out;
}

CliqueResult max_stable_set(const Graph& g) { return max_clique(complement(g)); }

MatchingResult is_matched(const Graph& g, VertexSet x, VertexSet y) {
    require_subset(g, x, "is_matched x");
    require_subset(g, y, "is_matched y");
    if (x.intersects(y)) throw InputError("is_matched: sets overlap on " + (x & y).to_string());
    if (x.size() != y.size()) {
        throw InputError("is_matched: |x| = " + std::to_string(x.size()) + " but |y| = " + std::to_string(y.size()));
    }

    std::array<int, kMaxVertices> mate{};  // mate[v] for v in x or y, -1 if free
    mate.fill(-1);

    // Kuhn's augmenting-path search from a free x-vertex.
    std::function<bool(int, VertexSet&)> augment = [&](int u, VertexSet& seen) {
        for (int w : g.neighbors(u) & y) {
            if (seen.contains(w)) continue;
            seen = seen.with(w);
            if (mate[w] < 0 || augment(mate[w], seen)) {
                mate[w] = u;
                mate[u] = w;
                return true;
            }
        }
        return false;
    };
    for (int u : x) {
        VertexSet seen;
        augment(u, seen);
    }

    MatchingResult result;
    VertexSet free_x;
    for (int u : x) {
        if (mate[u] < 0) free_x = free_x.with(u);
    }
    if (free_x.empty()) {
        result.matched = true;
        for (int u : x) result.matching.emplace_back(u, mate[u]);
        return result;
    }

    // x-vertices reachable from free x-vertices by alternating paths. Every
    // y-neighbour of this set is matched back into it, so it violates Hall.
    VertexSet reached = free_x;
    VertexSet frontier = free_x;
    while (!frontier.empty()) {
        VertexSet next;
        for (int u : frontier) {
            for (int w : g.neighbors(u) & y) {
                const int back = mate[w];
                if (back >= 0 && !reached.contains(back)) next = next.with(back);
            }
        }
        reached = reached | next;
        frontier = next;
    }
    result.hall_violator = reached;
    return result;
}

}  // namespace addpair
