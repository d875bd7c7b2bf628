#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "fracbox/errors.hpp"
#include "fracbox/graph.hpp"

namespace fracbox {

/// Vertex guard for the factorial automorphism search.
inline constexpr int kDefaultMaxAutomorphismVertices = 10;

/// Bijection on 0..n-1, stored compactly so groups of millions of
/// permutations stay affordable.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(int n) : n_(std::uint8_t(n)) {
        for (int i = 0; i < n; ++i) map_[i] = std::uint8_t(i);
    }

    static Permutation identity(int n) { return Permutation(n); }

    int size() const { return n_; }
    int operator[](int v) const { return map_[v]; }
    void assign(int v, int image) { map_[v] = std::uint8_t(image); }

    Permutation inverse() const {
        Permutation inv(n_);
        for (int i = 0; i < n_; ++i) inv.map_[map_[i]] = std::uint8_t(i);
        return inv;
    }

    /// (this ∘ other)(v) = this[other[v]].
    Permutation compose(const Permutation& other) const {
        Permutation out(n_);
        for (int i = 0; i < n_; ++i) out.map_[i] = map_[other.map_[i]];
        return out;
    }

    bool operator==(const Permutation& o) const {
        return n_ == o.n_ && std::equal(map_.begin(), map_.begin() + n_, o.map_.begin());
    }
    bool operator<(const Permutation& o) const {
        return std::lexicographical_compare(map_.begin(), map_.begin() + n_,
                                            o.map_.begin(), o.map_.begin() + o.n_);
    }

private:
    std::uint8_t n_ = 0;
    std::array<std::uint8_t, kMaxStructuralVertices> map_{};
};

/// Explicit list of all automorphisms of one graph, in lexicographic order.
struct AutomorphismGroup {
    std::vector<Permutation> permutations;

    std::size_t size() const { return permutations.size(); }
};

/// Exhaustive backtracking over vertex images with degree pruning. Exactly
/// the permutations pi with pi(E(g)) = E(g), lexicographically sorted (the
/// identity is always first).
inline AutomorphismGroup automorphisms(const Graph& g,
                                       int max_n = kDefaultMaxAutomorphismVertices) {
    const int n = g.vertex_count();
    if (n > max_n) throw SizeLimitError("max automorphism vertices", max_n, n);

    AutomorphismGroup group;
    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) degree[v] = g.degree(v);

    // Images are tried in ascending order, so completed permutations come
    // out lexicographically sorted.
    auto extend = [&](auto&& self, int v) -> void {
        if (v == n) {
            Permutation p(n);
            for (int i = 0; i < n; ++i) p.assign(i, image[i]);
            group.permutations.push_back(p);
            return;
        }
        for (int cand = 0; cand < n; ++cand) {
            if (used[cand] || degree[cand] != degree[v]) continue;
            bool ok = true;
            for (int w = 0; w < v && ok; ++w)
                if (g.has_edge(v, w) != g.has_edge(cand, image[w])) ok = false;
            if (!ok) continue;
            image[v] = cand;
            used[cand] = true;
            self(self, v + 1);
            used[cand] = false;
            image[v] = -1;
        }
    };
    extend(extend, 0);
    return group;
}

/// The edge map induced by a vertex permutation: edge (u,v) of g goes to
/// (pi(u), pi(v)). Returned as a permutation of EdgeIds over edge_universe(g).
/// Requires pi to be an automorphism of g (every image pair is an edge).
inline std::vector<EdgeId> induced_edge_map(const Graph& g, const Permutation& pi) {
    const auto universe = edge_universe(g);
    std::vector<std::vector<EdgeId>> id_of(g.vertex_count(),
                                           std::vector<EdgeId>(g.vertex_count(), -1));
    for (EdgeId e = 0; e < EdgeId(universe.size()); ++e) {
        id_of[universe[e].first][universe[e].second] = e;
        id_of[universe[e].second][universe[e].first] = e;
    }
    std::vector<EdgeId> out(universe.size());
    for (EdgeId e = 0; e < EdgeId(universe.size()); ++e) {
        const int u = pi[universe[e].first];
        const int v = pi[universe[e].second];
        const EdgeId img = id_of[u][v];
        if (img < 0)
            throw std::invalid_argument("induced_edge_map: permutation is not an automorphism");
        out[e] = img;
    }
    return out;
}

/// Orbits of edge_universe(g) under the automorphism group, each orbit
/// sorted, orbits ordered by smallest member.
inline std::vector<std::vector<EdgeId>> edge_orbits(const Graph& g,
                                                    const AutomorphismGroup& aut) {
    const auto universe = edge_universe(g);
    const int m = int(universe.size());
    std::vector<std::vector<EdgeId>> maps;
    maps.reserve(aut.permutations.size());
    for (const auto& pi : aut.permutations) maps.push_back(induced_edge_map(g, pi));

    std::vector<int> orbit_of(m, -1);
    std::vector<std::vector<EdgeId>> orbits;
    for (EdgeId start = 0; start < m; ++start) {
        if (orbit_of[start] >= 0) continue;
        std::vector<EdgeId> orbit;
        std::vector<EdgeId> stack{start};
        orbit_of[start] = int(orbits.size());
        while (!stack.empty()) {
            EdgeId e = stack.back();
            stack.pop_back();
            orbit.push_back(e);
            for (const auto& map : maps) {
                EdgeId img = map[e];
                if (orbit_of[img] < 0) {
                    orbit_of[img] = int(orbits.size());
                    stack.push_back(img);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

/// True iff the automorphism group acts with a single orbit on E(g).
/// Edgeless graphs are vacuously edge-transitive.
inline bool is_edge_transitive(const Graph& g,
                               int max_n = kDefaultMaxAutomorphismVertices) {
    if (g.edge_count() == 0) return true;
    const auto aut = automorphisms(g, max_n);
    return edge_orbits(g, aut).size() == 1;
}

} // namespace fracbox
