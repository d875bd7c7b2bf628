#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "fracbox/covering.hpp"
#include "fracbox/graph.hpp"

namespace testutil {

using fracbox::CoveringSystem;
using fracbox::EdgeSet;
using fracbox::Graph;

/// Adjacency as a bitmask over the C(n,2) lexicographic vertex pairs.
inline std::uint32_t graph_mask(const Graph& g) {
    std::uint32_t mask = 0;
    int bit = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v, ++bit)
            if (g.has_edge(u, v)) mask |= 1u << bit;
    return mask;
}

inline Graph graph_from_mask(int n, std::uint32_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1u) g.add_edge(u, v);
    return g;
}

/// Every labeled graph on n vertices, in mask order.
inline std::vector<Graph> labeled_graphs(int n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<Graph> out;
    out.reserve(std::size_t(1) << pairs);
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask)
        out.push_back(graph_from_mask(n, mask));
    return out;
}

/// One representative per isomorphism class: graphs whose mask is minimal
/// across all vertex relabelings. Cached per n.
inline const std::vector<Graph>& iso_classes(int n) {
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    const int pairs = n * (n - 1) / 2;
    std::vector<Graph> reps;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        const Graph g = graph_from_mask(n, mask);
        bool canonical = true;
        for (const auto& p : perms) {
            Graph h(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (g.has_edge(u, v)) h.add_edge(p[u], p[v]);
            if (graph_mask(h) < mask) {
                canonical = false;
                break;
            }
        }
        if (canonical) reps.push_back(g);
    }
    return cache.emplace(n, std::move(reps)).first->second;
}

inline Graph random_graph(std::mt19937& rng, int n, double p = 0.5) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

/// Independent interval-recognition oracle: backtracking search for a model
/// with integer endpoints in {0,...,2n}, pruned by partial adjacency
/// consistency.
inline bool has_interval_model(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    const int hi = 2 * n;
    std::vector<std::pair<int, int>> cand;
    for (int l = 0; l <= hi; ++l)
        for (int r = l; r <= hi; ++r) cand.emplace_back(l, r);
    std::vector<int> chosen(n, -1);
    auto meets = [&](int a, int b) {
        return cand[a].first <= cand[b].second && cand[b].first <= cand[a].second;
    };
    auto place = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int c = 0; c < int(cand.size()); ++c) {
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (meets(chosen[u], c) != g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (ok) {
                chosen[v] = c;
                if (self(self, v + 1)) return true;
            }
        }
        return false;
    };
    return place(place, 0);
}

/// Exhaustive covering-ILP oracle: all x in {0..s}^k by odometer.
inline int brute_ilp_value(const CoveringSystem& sys, int s) {
    const int m = int(sys.rows.size());
    const int k = int(sys.columns.size());
    if (m == 0) return 0;
    std::vector<int> x(k, 0);
    int best = -1;
    while (true) {
        std::vector<int> hit(m, 0);
        for (int j = 0; j < k; ++j)
            for (fracbox::EdgeId id : sys.columns[j].to_vector()) hit[id] += x[j];
        if (std::all_of(hit.begin(), hit.end(), [&](int h) { return h >= s; })) {
            const int total = std::accumulate(x.begin(), x.end(), 0);
            if (best < 0 || total < best) best = total;
        }
        int j = 0;
        while (j < k && x[j] == s) x[j++] = 0;
        if (j == k) break;
        ++x[j];
    }
    return best;
}

} // namespace testutil
