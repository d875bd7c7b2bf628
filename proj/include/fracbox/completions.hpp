#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "fracbox/errors.hpp"
#include "fracbox/graph.hpp"
#include "fracbox/interval.hpp"

namespace fracbox {

/// A fill set: edges of the complement whose addition to g is considered.
/// Indices refer to edge_universe(complement(g)).
using FillSet = EdgeSet;

struct CompletionLimits {
    int enumerate_limit = 24; // branch enumerator cap on |E(gbar)|
    int brute_limit = 20;     // brute-force cap on |E(gbar)|
    int fallback_threshold = 16; // dispatcher prefers brute force up to here
};

/// The cointerval hypergraph: vertices are the edges of gbar (in universe
/// order), hyperedges are the maximal cointerval edge subsets.
struct Hypergraph {
    Graph host;                         // gbar
    std::vector<std::pair<int, int>> ground; // edge universe of gbar
    std::vector<EdgeSet> hyperedges;    // sorted by (cardinality, mask)
};

/// All minimal fill sets by exhaustive subset search over E(gbar), visited
/// in order of increasing cardinality so supersets of recorded answers can
/// be skipped. Reference enumerator; exponential in |E(gbar)|.
inline std::vector<FillSet> brute_force_completions(const Graph& g, int max_complement_edges = CompletionLimits{}.brute_limit) {
    const Graph gbar = complement(g);
    const auto universe = edge_universe(gbar);
    const int m = int(universe.size());
    if (m > max_complement_edges)
        throw SizeLimitError("max complement edges", max_complement_edges, m);
    if (m > 30) // subset masks live in 32 bits
        throw SizeLimitError("max complement edges", 30, m);

    std::vector<std::uint32_t> kept;
    for (int size = 0; size <= m; ++size) {
        std::uint32_t f = size == 0 ? 0u : (1u << size) - 1u;
        while (true) {
            const bool dominated = std::any_of(kept.begin(), kept.end(), [&](std::uint32_t k) {
                return (k & ~f) == 0;
            });
            if (!dominated) {
                Graph h = g;
                for (int i = 0; i < m; ++i)
                    if (f >> i & 1u) h.add_edge(universe[i].first, universe[i].second);
                if (detail::interval_quick(h)) kept.push_back(f);
            }
            if (size == 0) break;
            // Gosper's hack: next mask with the same popcount.
            const std::uint32_t c = f & ~(f - 1u);
            const std::uint32_t r = f + c;
            f = (((f ^ r) >> 2) / c) | r;
            if (f >= (1u << m)) break;
        }
    }

    std::vector<FillSet> fills;
    fills.reserve(kept.size());
    for (std::uint32_t mask : kept) {
        FillSet fs(m);
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1u) fs.set(i);
        fills.push_back(fs);
    }
    std::sort(fills.begin(), fills.end());
    return fills;
}

namespace detail {

/// Candidate fill edges forced by an obstruction in h: any interval
/// supergraph must contain a chord of a hole, or an edge joining one triple
/// vertex to a certifying path between the other two.
inline std::vector<EdgeId> branch_edges(const Graph& h, const Obstruction& o,
                                        const std::vector<std::vector<EdgeId>>& edge_id) {
    std::vector<EdgeId> ids;
    auto add = [&](int u, int v) {
        if (u != v && !h.has_edge(u, v)) ids.push_back(edge_id[u][v]);
    };
    if (const auto* hole = std::get_if<HoleObstruction>(&o)) {
        const auto& cyc = hole->cycle;
        const int len = int(cyc.size());
        for (int i = 0; i < len; ++i)
            for (int j = i + 2; j < len; ++j)
                if (!(i == 0 && j == len - 1)) add(cyc[i], cyc[j]);
    } else {
        const auto& at = std::get<ATObstruction>(o);
        for (int v : at.path_ab) add(at.c, v);
        for (int v : at.path_ac) add(at.b, v);
        for (int v : at.path_bc) add(at.a, v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

} // namespace detail

/// Minimal fill sets by obstruction branching: repeatedly pick an
/// obstruction and branch on every non-edge that could destroy it. Every
/// minimal completion survives some branch; leaves are filtered down to the
/// minimal ones.
inline std::vector<FillSet> branch_completions(const Graph& g, int max_complement_edges = CompletionLimits{}.enumerate_limit) {
    const Graph gbar = complement(g);
    const auto universe = edge_universe(gbar);
    const int m = int(universe.size());
    if (m > max_complement_edges)
        throw SizeLimitError("max complement edges", max_complement_edges, m);

    const int n = g.vertex_count();
    std::vector<std::vector<EdgeId>> edge_id(n, std::vector<EdgeId>(n, -1));
    for (int i = 0; i < m; ++i) {
        edge_id[universe[i].first][universe[i].second] = i;
        edge_id[universe[i].second][universe[i].first] = i;
    }

    std::unordered_set<EdgeSet, EdgeSetHash> visited;
    std::vector<EdgeSet> leaves;
    auto grow = [&](auto&& self, const EdgeSet& fill) -> void {
        if (!visited.insert(fill).second) return;
        for (const EdgeSet& leaf : leaves)
            if (leaf.subset_of(fill)) return; // only non-minimal fills below here
        Graph h = g;
        for (EdgeId id : fill.to_vector())
            h.add_edge(universe[id].first, universe[id].second);
        const auto res = is_interval(h);
        if (res.interval) {
            leaves.push_back(fill);
            return;
        }
        for (EdgeId id : detail::branch_edges(h, *res.obstruction, edge_id)) {
            EdgeSet child = fill;
            child.set(id);
            self(self, child);
        }
    };
    grow(grow, EdgeSet(m));

    std::vector<FillSet> fills;
    for (const EdgeSet& f : leaves) {
        const bool minimal = std::none_of(leaves.begin(), leaves.end(), [&](const EdgeSet& o) {
            return !(o == f) && o.subset_of(f);
        });
        if (minimal) fills.push_back(f);
    }
    std::sort(fills.begin(), fills.end());
    return fills;
}

/// All minimal interval completions of g, as fill sets over E(gbar).
/// Dispatches to the exhaustive search on small complements and to the
/// branching enumerator above that.
inline std::vector<FillSet> enumerate_minimal_completions(const Graph& g,
                                                          const CompletionLimits& limits = {}) {
    const int m = g.vertex_count() * (g.vertex_count() - 1) / 2 - g.edge_count();
    if (m > limits.enumerate_limit)
        throw SizeLimitError("max complement edges", limits.enumerate_limit, m);
    if (m <= limits.fallback_threshold && m <= limits.brute_limit)
        return brute_force_completions(g, limits.brute_limit);
    return branch_completions(g, limits.enumerate_limit);
}

/// The maximal hyperedges of the cointerval hypergraph of gbar: complements
/// of the minimal fill sets. The empty hyperedge (fill = all of E(gbar),
/// possible only when E(gbar) is empty) is excluded.
inline Hypergraph maximal_hyperedges(const Graph& g, const CompletionLimits& limits = {}) {
    Hypergraph hg;
    hg.host = complement(g);
    hg.ground = edge_universe(hg.host);
    for (const FillSet& fill : enumerate_minimal_completions(g, limits)) {
        const EdgeSet he = fill.complement_in_universe();
        if (!he.empty()) hg.hyperedges.push_back(he);
    }
    std::sort(hg.hyperedges.begin(), hg.hyperedges.end());
    return hg;
}

} // namespace fracbox
