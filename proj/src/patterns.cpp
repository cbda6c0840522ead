#include "addpair/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "addpair/canonical.hpp"
#include "addpair/error.hpp"

namespace addpair {

using namespace vertex;

Graph f_member(unsigned mask) {
    if (mask >= 64) throw InputError("F member mask must be < 64, got " + std::to_string(mask));
    GraphBuilder builder(6);
    builder.add_edge(a1, a2).add_edge(a1, a3).add_edge(a2, a3);
    builder.add_edge(b1, b2).add_edge(b1, b3).add_edge(b2, b3);
    for (std::size_t k = 0; k < kFCrossPairs.size(); ++k) {
        if ((mask >> k) & 1U) builder.add_edge(kFCrossPairs[k].first, kFCrossPairs[k].second);
    }
    return builder.build();
}

namespace {

PatternCatalog dedup_catalog(std::string name, std::vector<Graph> labelled) {
    PatternCatalog catalog{std::move(name), {}, std::move(labelled)};
    std::vector<std::string> seen;
    for (const Graph& g : catalog.labelled) {
        std::string form = canonical_form(g);
        if (std::find(seen.begin(), seen.end(), form) != seen.end()) continue;
        seen.push_back(std::move(form));
        catalog.members.push_back(g);
    }
    return catalog;
}

}  // namespace

PatternCatalog build_F() {
    std::vector<Graph> labelled;
    for (unsigned mask = 0; mask < 64; ++mask) labelled.push_back(f_member(mask));
    return dedup_catalog("F", std::move(labelled));
}

Graph build_P0() {
    GraphBuilder builder(7);
    builder.add_edge(a1, a2).add_edge(a1, a3).add_edge(a2, a3);
    // b_i misses a_i and sees the other two a's.
    builder.add_edge(b1, a2).add_edge(b1, a3);
    builder.add_edge(b2, a1).add_edge(b2, a3);
    builder.add_edge(b3, a1).add_edge(b3, a2);
    builder.add_edge(c, b1);
    return builder.build();
}

Graph build_P1() { return build_P0().with_edge(c, b2); }

Graph build_P2() { return build_P1().with_edge(c, b3); }

Graph build_P0_complement() { return complement(build_P0()); }

PatternCatalog build_P() { return dedup_catalog("P", {build_P0(), build_P1(), build_P2()}); }

PatternCatalog build_C5() { return dedup_catalog("C5", {cycle(5)}); }

PatternCatalog build_P0c() { return dedup_catalog("P0c", {build_P0_complement()}); }

const PatternCatalog& catalog_F() {
    static const PatternCatalog catalog = build_F();
    return catalog;
}

const PatternCatalog& catalog_P() {
    static const PatternCatalog catalog = build_P();
    return catalog;
}

const PatternCatalog& catalog_C5() {
    static const PatternCatalog catalog = build_C5();
    return catalog;
}

const PatternCatalog& catalog_P0c() {
    static const PatternCatalog catalog = build_P0c();
    return catalog;
}

namespace {

struct InducedSearch {
    const Graph& host;
    const Graph& pattern;
    std::array<int, kPatternMaxOrder> order{};
    std::array<int, kPatternMaxOrder> assigned{};
    // Host vertices with enough neighbours and non-neighbours for each
    // pattern vertex.
    std::array<VertexSet, kPatternMaxOrder> degree_ok{};

    bool search(int depth, VertexSet used) {
        const int k = pattern.order();
        if (depth == k) return true;
        const int p = order[depth];
        VertexSet candidates = degree_ok[p] - used;
        for (int d = 0; d < depth; ++d) {
            const int q = order[d];
            const VertexSet around = host.neighbors(assigned[q]);
            candidates = pattern.adjacent(p, q) ? (candidates & around) : (candidates - around);
        }
        for (int h : candidates) {
            assigned[p] = h;
            if (search(depth + 1, used.with(h))) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern) {
    const int k = pattern.order();
    if (k > kPatternMaxOrder) {
        throw UnsupportedSize("induced containment supports patterns of order <= 8, got " + std::to_string(k));
    }
    if (k > host.order()) return std::nullopt;

    InducedSearch s{host, pattern};
    std::iota(s.order.begin(), s.order.begin() + k, 0);
    std::stable_sort(s.order.begin(), s.order.begin() + k,
                     [&](int p, int q) { return pattern.degree(p) > pattern.degree(q); });
    const int n = host.order();
    for (int p = 0; p < k; ++p) {
        const int need_in = pattern.degree(p);
        const int need_out = k - 1 - need_in;
        VertexSet ok;
        for (int h = 0; h < n; ++h) {
            const int deg = host.degree(h);
            if (deg >= need_in && n - 1 - deg >= need_out) ok = ok.with(h);
        }
        s.degree_ok[p] = ok;
    }
    if (!s.search(0, VertexSet{})) return std::nullopt;
    return Embedding{std::vector<int>(s.assigned.begin(), s.assigned.begin() + k)};
}

std::optional<MemberMatch> contains_member(const Graph& host, const PatternCatalog& catalog) {
    for (std::size_t i = 0; i < catalog.members.size(); ++i) {
        if (auto embedding = contains_induced(host, catalog.members[i])) return MemberMatch{i, std::move(*embedding)};
    }
    return std::nullopt;
}

const char* side_name(Side side) { return side == Side::B ? "B" : "R"; }

bool OutcomeSet::any() const { return std::any_of(holds.begin(), holds.end(), [](bool h) { return h; }); }

std::vector<int> OutcomeSet::list() const {
    std::vector<int> out;
    for (int k = 1; k <= 5; ++k) {
        if (holds[k - 1]) out.push_back(k);
    }
    return out;
}

namespace {

struct SideFacts {
    std::optional<Containment> f, c5, p0c, p;
};

std::optional<Containment> find_in(const Graph& host, Side side, const PatternCatalog& catalog) {
    auto match = contains_member(host, catalog);
    if (!match) return std::nullopt;
    return Containment{side, catalog.name, match->member_index, std::move(match->embedding)};
}

SideFacts facts_for(const Graph& host, Side side) {
    return {find_in(host, side, catalog_F()), find_in(host, side, catalog_C5()),
            find_in(host, side, catalog_P0c()), find_in(host, side, catalog_P())};
}

void record(OutcomeSet& out, int k, std::initializer_list<const std::optional<Containment>*> parts) {
    for (const auto* part : parts) {
        if (!part->has_value()) return;
    }
    out.holds[k - 1] = true;
    for (const auto* part : parts) out.evidence[k - 1].push_back(**part);
}

}  // namespace

OutcomeSet classify_outcomes(const Graph& b, const Graph& r) {
    require_same_order(b, r, "classify_outcomes");
    const SideFacts fb = facts_for(b, Side::B);
    const SideFacts fr = facts_for(r, Side::R);

    OutcomeSet out;
    if (fb.f) {
        record(out, 1, {&fb.f});
    } else {
        record(out, 1, {&fr.f});
    }
    record(out, 2, {&fb.c5, &fr.c5});
    record(out, 3, {&fb.p0c, &fr.p0c});
    record(out, 4, {&fb.p0c, &fr.p});
    record(out, 5, {&fr.p0c, &fb.p});
    return out;
}

}  // namespace addpair
