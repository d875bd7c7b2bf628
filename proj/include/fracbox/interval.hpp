#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "fracbox/graph.hpp"

namespace fracbox {

/// Closed intervals [l_v, r_v] with integer endpoints, one per vertex;
/// u and v are adjacent iff their intervals intersect.
struct IntervalModel {
    std::vector<std::pair<int, int>> intervals;
};

/// A chordless cycle of length >= 4, listed in cyclic order.
struct HoleObstruction {
    std::vector<int> cycle;
};

/// An asteroidal triple a < b < c with the three certifying paths; each path
/// runs between two of the vertices and avoids the closed neighborhood of
/// the third.
struct ATObstruction {
    int a = 0, b = 0, c = 0;
    std::vector<int> path_ab; // avoids N[c]
    std::vector<int> path_ac; // avoids N[b]
    std::vector<int> path_bc; // avoids N[a]
};

using Obstruction = std::variant<HoleObstruction, ATObstruction>;

struct IntervalResult {
    bool interval = false;
    std::optional<IntervalModel> model;       // present iff interval
    std::optional<Obstruction> obstruction;   // present iff not interval
};

namespace detail {

/// Lexicographic BFS visit order; ties broken toward the smallest vertex.
inline std::vector<int> lex_bfs_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> label(n);
    std::vector<bool> visited(n, false);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (visited[v]) continue;
            if (best < 0 || label[v] > label[best]) best = v;
        }
        visited[best] = true;
        order.push_back(best);
        for (int w = 0; w < n; ++w)
            if (!visited[w] && g.has_edge(best, w)) label[w].push_back(n - step);
    }
    return order;
}

/// Chordality test: the reverse of a Lex-BFS order is a perfect elimination
/// ordering iff the graph is chordal, i.e. every vertex's earlier-visited
/// neighbors form a clique.
inline bool lex_bfs_is_chordal(const Graph& g, const std::vector<int>& visit_order) {
    const int n = g.vertex_count();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[visit_order[i]] = i;
    for (int v = 0; v < n; ++v) {
        std::vector<int> earlier;
        for (int w = 0; w < n; ++w)
            if (g.has_edge(v, w) && pos[w] < pos[v]) earlier.push_back(w);
        for (std::size_t i = 0; i < earlier.size(); ++i)
            for (std::size_t j = i + 1; j < earlier.size(); ++j)
                if (!g.has_edge(earlier[i], earlier[j])) return false;
    }
    return true;
}

/// Walk an induced cycle given its vertex set (every member has exactly two
/// neighbors inside). Starts at the smallest vertex and moves toward its
/// smaller neighbor.
inline std::vector<int> walk_cycle(const Graph& g, const std::vector<int>& members) {
    const int start = members.front();
    std::vector<int> nbrs;
    for (int w : members)
        if (g.has_edge(start, w)) nbrs.push_back(w);
    std::sort(nbrs.begin(), nbrs.end());
    std::vector<int> cycle{start, nbrs.front()};
    while (true) {
        const int cur = cycle.back();
        const int prev = cycle[cycle.size() - 2];
        int next = -1;
        for (int w : members)
            if (w != prev && w != cur && g.has_edge(cur, w)) { next = w; break; }
        if (next == start || next < 0) break;
        cycle.push_back(next);
    }
    return cycle;
}

/// Smallest chordless cycle of length >= 4; among shortest, the one with the
/// lexicographically least vertex set. Present whenever g is not chordal.
inline std::optional<std::vector<int>> find_hole(const Graph& g) {
    const int n = g.vertex_count();
    for (int len = 4; len <= n; ++len) {
        std::vector<int> comb(len);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            // Induced cycle <=> every member has exactly 2 neighbors inside
            // and the members are connected.
            bool cyclic = true;
            for (int v : comb) {
                int deg = 0;
                for (int w : comb) deg += g.has_edge(v, w);
                if (deg != 2) { cyclic = false; break; }
            }
            if (cyclic) {
                auto cycle = walk_cycle(g, comb);
                if (int(cycle.size()) == len) return cycle; // connected: one cycle
            }
            // next combination, lexicographic
            int i = len - 1;
            while (i >= 0 && comb[i] == n - len + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < len; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return std::nullopt;
}

/// Component ids of g restricted to the vertices of `allowed`; -1 outside.
inline std::vector<int> components_within(const Graph& g, std::uint16_t allowed) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int next_id = 0;
    for (int v = 0; v < n; ++v) {
        if (!(allowed >> v & 1u) || comp[v] >= 0) continue;
        std::vector<int> stack{v};
        comp[v] = next_id;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if ((allowed >> w & 1u) && comp[w] < 0 && g.has_edge(cur, w)) {
                    comp[w] = next_id;
                    stack.push_back(w);
                }
            }
        }
        ++next_id;
    }
    return comp;
}

/// Shortest path from a to b inside `allowed` (BFS, ascending neighbor
/// order). Both endpoints must lie in `allowed` and be connected there.
inline std::vector<int> path_within(const Graph& g, std::uint16_t allowed, int a, int b) {
    const int n = g.vertex_count();
    std::vector<int> parent(n, -2);
    std::vector<int> queue{a};
    parent[a] = -1;
    for (std::size_t head = 0; head < queue.size() && parent[b] == -2; ++head) {
        int cur = queue[head];
        for (int w = 0; w < n; ++w) {
            if ((allowed >> w & 1u) && parent[w] == -2 && g.has_edge(cur, w)) {
                parent[w] = cur;
                queue.push_back(w);
            }
        }
    }
    std::vector<int> path;
    for (int v = b; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

/// Lexicographically smallest triple (a,b,c) such that each pair stays
/// connected when the third vertex's closed neighborhood is removed.
inline std::optional<std::array<int, 3>> asteroidal_triple_core(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> comp(n);
    for (int v = 0; v < n; ++v) {
        const auto allowed = std::uint16_t(~g.closed_neighborhood(v) & ((1u << n) - 1u));
        comp[v] = components_within(g, allowed);
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                const bool ab = comp[c][a] >= 0 && comp[c][a] == comp[c][b];
                const bool ac = comp[b][a] >= 0 && comp[b][a] == comp[b][c];
                const bool bc = comp[a][b] >= 0 && comp[a][b] == comp[a][c];
                if (ab && ac && bc) return std::array<int, 3>{a, b, c};
            }
    return std::nullopt;
}

/// As above, with the certifying paths filled in.
inline std::optional<ATObstruction> find_asteroidal_triple(const Graph& g) {
    const auto core = asteroidal_triple_core(g);
    if (!core) return std::nullopt;
    const int n = g.vertex_count();
    auto allowed = [&](int v) {
        return std::uint16_t(~g.closed_neighborhood(v) & ((1u << n) - 1u));
    };
    ATObstruction at;
    at.a = (*core)[0];
    at.b = (*core)[1];
    at.c = (*core)[2];
    at.path_ab = path_within(g, allowed(at.c), at.a, at.b);
    at.path_ac = path_within(g, allowed(at.b), at.a, at.c);
    at.path_bc = path_within(g, allowed(at.a), at.b, at.c);
    return at;
}

/// Witness-free recognition for enumeration loops.
inline bool interval_quick(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    if (!lex_bfs_is_chordal(g, lex_bfs_order(g))) return false;
    return !asteroidal_triple_core(g).has_value();
}

/// All maximal cliques as vertex masks (Bron-Kerbosch), sorted by mask.
inline std::vector<std::uint16_t> maximal_cliques(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint16_t> out;
    auto expand = [&](auto&& self, std::uint16_t r, std::uint16_t p, std::uint16_t x) -> void {
        if (p == 0 && x == 0) {
            out.push_back(r);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (!(p >> v & 1u)) continue;
            const std::uint16_t nv = g.neighbors(v);
            self(self, std::uint16_t(r | (1u << v)), std::uint16_t(p & nv),
                 std::uint16_t(x & nv));
            p &= std::uint16_t(~(1u << v));
            x |= std::uint16_t(1u << v);
        }
    };
    expand(expand, 0, std::uint16_t((1u << n) - 1u), 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Order the maximal cliques so that the cliques containing each vertex are
/// consecutive. Exists for every chordal AT-free graph; found by
/// backtracking with memoized dead states.
inline std::optional<std::vector<int>> consecutive_clique_order(
    const std::vector<std::uint16_t>& cliques) {
    const int k = int(cliques.size());
    if (k == 0) return std::vector<int>{};
    std::vector<std::vector<bool>> dead_at(k, std::vector<bool>(std::size_t(1) << k, false));
    std::vector<int> order;

    auto extend = [&](auto&& self, std::uint32_t used, int last, std::uint16_t seen) -> bool {
        if (int(std::popcount(used)) == k) return true;
        if (last >= 0 && dead_at[last][used]) return false;
        const std::uint16_t prev = last >= 0 ? cliques[last] : 0;
        for (int c = 0; c < k; ++c) {
            if (used >> c & 1u) continue;
            // A vertex seen before may only continue from the immediately
            // preceding clique; reopening a closed run is not allowed.
            if (cliques[c] & seen & std::uint16_t(~prev)) continue;
            order.push_back(c);
            if (self(self, used | (1u << c), c, std::uint16_t(seen | cliques[c])))
                return true;
            order.pop_back();
        }
        if (last >= 0) dead_at[last][used] = true;
        return false;
    };
    if (!extend(extend, 0, -1, 0)) return std::nullopt;
    return order;
}

} // namespace detail

/// True iff the model reproduces g's adjacency relation exactly.
inline bool model_matches(const Graph& g, const IntervalModel& m) {
    const int n = g.vertex_count();
    if (int(m.intervals.size()) != n) return false;
    for (const auto& [l, r] : m.intervals)
        if (l > r) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const bool meet = m.intervals[u].first <= m.intervals[v].second &&
                              m.intervals[v].first <= m.intervals[u].second;
            if (meet != g.has_edge(u, v)) return false;
        }
    return true;
}

/// Obstruction verifiers; polynomial checks against the graph itself.
inline bool verify_hole(const Graph& g, const HoleObstruction& hole) {
    const auto& cyc = hole.cycle;
    const int len = int(cyc.size());
    if (len < 4) return false;
    std::vector<bool> seen(g.vertex_count(), false);
    for (int v : cyc) {
        if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
        seen[v] = true;
    }
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            const bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (g.has_edge(cyc[i], cyc[j]) != consecutive) return false;
        }
    return true;
}

inline bool verify_asteroidal_triple(const Graph& g, const ATObstruction& at) {
    auto path_ok = [&](const std::vector<int>& path, int from, int to, int avoid) {
        if (path.empty() || path.front() != from || path.back() != to) return false;
        const std::uint16_t closed = g.closed_neighborhood(avoid);
        for (int v : path)
            if (v < 0 || v >= g.vertex_count() || (closed >> v & 1u)) return false;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (!g.has_edge(path[i], path[i + 1])) return false;
        return true;
    };
    return path_ok(at.path_ab, at.a, at.b, at.c) && path_ok(at.path_ac, at.a, at.c, at.b) &&
           path_ok(at.path_bc, at.b, at.c, at.a);
}

inline bool verify_obstruction(const Graph& g, const Obstruction& o) {
    if (const auto* hole = std::get_if<HoleObstruction>(&o)) return verify_hole(g, *hole);
    return verify_asteroidal_triple(g, std::get<ATObstruction>(o));
}

/// Interval recognition: chordal (Lex-BFS + elimination-order check) and
/// asteroidal-triple-free. The true branch carries a model built from a
/// consecutive ordering of the maximal cliques; the false branch carries a
/// deterministic obstruction (shortest hole, else smallest triple).
inline IntervalResult is_interval(const Graph& g) {
    IntervalResult res;
    const int n = g.vertex_count();
    if (n == 0) {
        res.interval = true;
        res.model = IntervalModel{};
        return res;
    }

    const auto order = detail::lex_bfs_order(g);
    if (!detail::lex_bfs_is_chordal(g, order)) {
        auto hole = detail::find_hole(g);
        if (!hole) throw std::logic_error("is_interval: non-chordal graph without a hole");
        res.interval = false;
        res.obstruction = HoleObstruction{*hole};
        return res;
    }

    if (auto at = detail::find_asteroidal_triple(g)) {
        res.interval = false;
        res.obstruction = *at;
        return res;
    }

    const auto cliques = detail::maximal_cliques(g);
    const auto clique_order = detail::consecutive_clique_order(cliques);
    if (!clique_order)
        throw std::logic_error("is_interval: chordal AT-free graph without a clique path");

    IntervalModel model;
    model.intervals.assign(n, {0, 0});
    std::vector<int> first(n, -1), last(n, -1);
    for (int p = 0; p < int(clique_order->size()); ++p) {
        const std::uint16_t mask = cliques[(*clique_order)[p]];
        for (int v = 0; v < n; ++v) {
            if (!(mask >> v & 1u)) continue;
            if (first[v] < 0) first[v] = p;
            last[v] = p;
        }
    }
    for (int v = 0; v < n; ++v) model.intervals[v] = {first[v], last[v]};
    if (!model_matches(g, model))
        throw std::logic_error("is_interval: constructed model does not reproduce adjacency");
    res.interval = true;
    res.model = model;
    return res;
}

/// Does the edge subset e of gbar's universe induce a cointerval subgraph,
/// i.e. is the complement of (V, e) an interval graph? The empty set always
/// qualifies (its complement is complete).
inline bool is_cointerval_edge_set(const Graph& gbar, const EdgeSet& e) {
    const auto universe = edge_universe(gbar);
    if (e.universe_size() != int(universe.size()))
        throw std::invalid_argument("is_cointerval_edge_set: edge set universe mismatch");
    Graph sub(gbar.vertex_count());
    for (EdgeId id : e.to_vector())
        sub.add_edge(universe[id].first, universe[id].second);
    return detail::interval_quick(complement(sub));
}

} // namespace fracbox
