#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fracbox/errors.hpp"

namespace fracbox {

/// Structural ceiling of the Graph type (adjacency rows are 16-bit masks).
inline constexpr int kMaxStructuralVertices = 16;
/// Default parse-time cap, overridable per call (CLI --max-n).
inline constexpr int kDefaultMaxVertices = 12;

using EdgeId = int;

/// Labeled simple undirected graph on vertices 0..n-1. Immutable by
/// convention once built; all operations below are pure functions.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxStructuralVertices)
            throw std::invalid_argument("Graph: vertex count out of range 0.." +
                                        std::to_string(kMaxStructuralVertices));
        adj_.fill(0);
    }

    int vertex_count() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
        adj_[u] |= std::uint16_t(1u << v);
        adj_[v] |= std::uint16_t(1u << u);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[u] &= std::uint16_t(~(1u << v));
        adj_[v] &= std::uint16_t(~(1u << u));
    }

    bool has_edge(int u, int v) const {
        return u != v && (adj_[u] >> v & 1u) != 0;
    }

    /// Neighbors of v as a bitmask over vertices.
    std::uint16_t neighbors(int v) const { return adj_[v]; }

    /// Closed neighborhood N[v] as a bitmask.
    std::uint16_t closed_neighborhood(int v) const {
        return std::uint16_t(adj_[v] | (1u << v));
    }

    int degree(int v) const { return std::popcount(std::uint32_t(adj_[v])); }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += degree(v);
        return total / 2;
    }

    bool operator==(const Graph& other) const {
        if (n_ != other.n_) return false;
        for (int v = 0; v < n_; ++v)
            if (adj_[v] != other.adj_[v]) return false;
        return true;
    }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("Graph: vertex " + std::to_string(v) +
                                        " out of range 0.." + std::to_string(n_ - 1));
    }

    int n_ = 0;
    std::array<std::uint16_t, kMaxStructuralVertices> adj_{};
};

/// Lexicographically sorted list of g's edges as (u,v) pairs with u < v.
/// Fixes the EdgeId <-> pair mapping used by every downstream module: the
/// edge at index i of this list has EdgeId i.
inline std::vector<std::pair<int, int>> edge_universe(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.has_edge(u, v)) edges.emplace_back(u, v);
    return edges;
}

/// Edge uv present in the result iff absent in g.
inline Graph complement(const Graph& g) {
    Graph out(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.has_edge(u, v)) out.add_edge(u, v);
    return out;
}

/// Subset of the edge universe of a fixed host graph, stored as a 128-bit
/// mask. Always interpreted relative to one host graph's edge_universe; the
/// stored universe size only guards against gross index misuse.
class EdgeSet {
public:
    EdgeSet() = default;

    explicit EdgeSet(int universe_size) : universe_(universe_size) {
        if (universe_size < 0 || universe_size > 128)
            throw std::invalid_argument("EdgeSet: universe size out of range");
    }

    int universe_size() const { return universe_; }

    void set(EdgeId e) {
        check(e);
        bits_[e >> 6] |= std::uint64_t(1) << (e & 63);
    }

    void reset(EdgeId e) {
        check(e);
        bits_[e >> 6] &= ~(std::uint64_t(1) << (e & 63));
    }

    bool test(EdgeId e) const {
        check(e);
        return (bits_[e >> 6] >> (e & 63) & 1u) != 0;
    }

    int count() const {
        return std::popcount(bits_[0]) + std::popcount(bits_[1]);
    }

    bool empty() const { return bits_[0] == 0 && bits_[1] == 0; }

    bool subset_of(const EdgeSet& other) const {
        return (bits_[0] & ~other.bits_[0]) == 0 && (bits_[1] & ~other.bits_[1]) == 0;
    }

    EdgeSet operator|(const EdgeSet& o) const {
        EdgeSet r(universe_);
        r.bits_ = {bits_[0] | o.bits_[0], bits_[1] | o.bits_[1]};
        return r;
    }

    EdgeSet operator&(const EdgeSet& o) const {
        EdgeSet r(universe_);
        r.bits_ = {bits_[0] & o.bits_[0], bits_[1] & o.bits_[1]};
        return r;
    }

    /// Set difference this \ o.
    EdgeSet minus(const EdgeSet& o) const {
        EdgeSet r(universe_);
        r.bits_ = {bits_[0] & ~o.bits_[0], bits_[1] & ~o.bits_[1]};
        return r;
    }

    /// Complement within the universe 0..universe_size-1.
    EdgeSet complement_in_universe() const {
        EdgeSet r = full(universe_);
        r.bits_[0] &= ~bits_[0];
        r.bits_[1] &= ~bits_[1];
        return r;
    }

    static EdgeSet full(int universe_size) {
        EdgeSet r(universe_size);
        for (EdgeId e = 0; e < universe_size; ++e) r.set(e);
        return r;
    }

    std::vector<EdgeId> to_vector() const {
        std::vector<EdgeId> out;
        for (EdgeId e = 0; e < universe_; ++e)
            if (test(e)) out.push_back(e);
        return out;
    }

    bool operator==(const EdgeSet& o) const { return bits_ == o.bits_; }
    bool operator!=(const EdgeSet& o) const { return bits_ != o.bits_; }

    /// Canonical bitset order: by cardinality, then by mask value. Gives a
    /// deterministic column order for the covering matrix.
    bool operator<(const EdgeSet& o) const {
        int a = count(), b = o.count();
        if (a != b) return a < b;
        if (bits_[1] != o.bits_[1]) return bits_[1] < o.bits_[1];
        return bits_[0] < o.bits_[0];
    }

    std::size_t hash() const {
        std::uint64_t h = bits_[0] * 0x9e3779b97f4a7c15ull;
        h ^= bits_[1] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }

private:
    void check(EdgeId e) const {
        if (e < 0 || e >= universe_)
            throw std::invalid_argument("EdgeSet: edge index " + std::to_string(e) +
                                        " out of range for universe of size " +
                                        std::to_string(universe_));
    }

    std::array<std::uint64_t, 2> bits_{};
    int universe_ = 0;
};

struct EdgeSetHash {
    std::size_t operator()(const EdgeSet& s) const { return s.hash(); }
};

// --- graph6 (McKay's format, single-byte sizes n <= 62) ---

/// Parse one line of graph6 text, optionally prefixed by ">>graph6<<".
/// Throws ParseError on malformed input and SizeLimitError when the encoded
/// graph has more than max_n vertices.
inline Graph parse_graph6(const std::string& text, int max_n = kDefaultMaxVertices) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
        s.pop_back();
    if (s.rfind(">>", 0) == 0) {
        const std::string header = ">>graph6<<";
        if (s.rfind(header, 0) != 0)
            throw ParseError(ParseError::Kind::BadHeader, "graph6: malformed header");
        s = s.substr(header.size());
    }
    if (s.empty())
        throw ParseError(ParseError::Kind::Truncated, "graph6: empty input");

    const unsigned char size_byte = static_cast<unsigned char>(s[0]);
    if (size_byte < 63)
        throw ParseError(ParseError::Kind::BadHeader, "graph6: size byte out of range");
    int n;
    if (size_byte == 126) {
        // Multi-byte size marker: always beyond our vertex cap.
        throw SizeLimitError("max vertices", max_n, 63);
    } else {
        n = size_byte - 63;
    }
    if (n > max_n) throw SizeLimitError("max vertices", max_n, n);

    const std::size_t num_bits = std::size_t(n) * (n - 1) / 2;
    const std::size_t num_bytes = (num_bits + 5) / 6;
    if (s.size() < 1 + num_bytes)
        throw ParseError(ParseError::Kind::Truncated, "graph6: string too short");
    if (s.size() > 1 + num_bytes)
        throw ParseError(ParseError::Kind::TrailingData, "graph6: trailing bytes");

    std::vector<bool> bits;
    bits.reserve(num_bytes * 6);
    for (std::size_t i = 0; i < num_bytes; ++i) {
        const unsigned char raw = static_cast<unsigned char>(s[1 + i]);
        if (raw < 63 || raw > 126)
            throw ParseError(ParseError::Kind::BadByte, "graph6: data byte out of range");
        const unsigned val = raw - 63;
        for (int j = 5; j >= 0; --j) bits.push_back((val >> j & 1u) != 0);
    }

    Graph g(n);
    std::size_t k = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (bits[k++]) g.add_edge(u, v);
    return g;
}

/// graph6 encoding of g, byte-exact inverse of parse_graph6 (no header).
inline std::string emit_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    out.push_back(char(n + 63));
    std::vector<bool> bits;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            bits.push_back(g.has_edge(u, v));
    while (bits.size() % 6 != 0) bits.push_back(false);
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        unsigned val = 0;
        for (int j = 0; j < 6; ++j) val = val << 1 | unsigned(bits[i + j]);
        out.push_back(char(val + 63));
    }
    return out;
}

// --- plain edge-list format: first line "n", then lines "u v" ---

inline Graph parse_edge_list(const std::string& text, int max_n = kDefaultMaxVertices) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    Graph g;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue; // blank line
        if (n < 0) {
            std::size_t pos = 0;
            try {
                n = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw ParseError(ParseError::Kind::BadToken,
                                 "edge list: vertex count is not an integer: '" + tok + "'");
            }
            if (pos != tok.size() || n < 0)
                throw ParseError(ParseError::Kind::BadToken,
                                 "edge list: bad vertex count '" + tok + "'");
            if (n > max_n) throw SizeLimitError("max vertices", max_n, n);
            std::string extra;
            if (ls >> extra)
                throw ParseError(ParseError::Kind::BadToken,
                                 "edge list: unexpected token after vertex count");
            g = Graph(n);
            continue;
        }
        int endpoints[2];
        for (int i = 0; i < 2; ++i) {
            if (i == 1 && !(ls >> tok))
                throw ParseError(ParseError::Kind::BadToken,
                                 "edge list: line " + std::to_string(line_no) +
                                     " has a lone endpoint");
            std::size_t pos = 0;
            try {
                endpoints[i] = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw ParseError(ParseError::Kind::BadToken,
                                 "edge list: non-integer token '" + tok + "'");
            }
            if (pos != tok.size())
                throw ParseError(ParseError::Kind::BadToken,
                                 "edge list: non-integer token '" + tok + "'");
        }
        std::string extra;
        if (ls >> extra)
            throw ParseError(ParseError::Kind::BadToken,
                             "edge list: unexpected token '" + extra + "'");
        const int u = endpoints[0], v = endpoints[1];
        if (u == v)
            throw ParseError(ParseError::Kind::SelfLoop,
                             "edge list: loop at vertex " + std::to_string(u));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(ParseError::Kind::VertexOutOfRange,
                             "edge list: endpoint out of range on line " +
                                 std::to_string(line_no));
        g.add_edge(u, v); // duplicates merge silently
    }
    if (n < 0)
        throw ParseError(ParseError::Kind::MissingCount, "edge list: missing vertex count");
    return g;
}

// --- small builders used across tools and tests ---

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

/// Complete multipartite graph; class i holds parts[i] consecutive vertices.
inline Graph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) n += p;
    Graph g(n);
    std::vector<int> cls(n);
    int v = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) cls[v++] = int(i);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (cls[a] != cls[b]) g.add_edge(a, b);
    return g;
}

} // namespace fracbox
