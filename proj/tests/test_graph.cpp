#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>
#include <set>

#include "fracbox/automorphism.hpp"
#include "fracbox/graph.hpp"
#include "helpers.hpp"

using namespace fracbox;

namespace {

ParseError::Kind parse_kind(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.kind();
    }
    FAIL("expected a ParseError");
    return ParseError::Kind::BadToken;
}

} // namespace

TEST_CASE("graph6 decodes the star on five vertices") {
    // Expected edges frozen from an independent decoder run on "D?{".
    const Graph g = parse_graph6("D?{");
    REQUIRE(g.vertex_count() == 5);
    REQUIRE(edge_universe(g) ==
            std::vector<std::pair<int, int>>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});
}

TEST_CASE("graph6 decodes K1") {
    const Graph g = parse_graph6("@");
    REQUIRE(g.vertex_count() == 1);
    REQUIRE(g.edge_count() == 0);
}

TEST_CASE("graph6 accepts the optional header and trailing newline") {
    const Graph g = parse_graph6(">>graph6<<D?{\n");
    REQUIRE(g.vertex_count() == 5);
    REQUIRE(g.edge_count() == 4);
}

TEST_CASE("graph6 round-trips every graph on at most 5 vertices") {
    for (int n = 1; n <= 5; ++n) {
        bool ok = true;
        for (const Graph& g : testutil::labeled_graphs(n)) {
            const std::string enc = emit_graph6(g);
            ok = ok && parse_graph6(enc) == g && emit_graph6(parse_graph6(enc)) == enc;
        }
        INFO("n = " << n);
        REQUIRE(ok);
    }
}

TEST_CASE("graph6 parse errors are distinct") {
    REQUIRE(parse_kind([] { parse_graph6(""); }) == ParseError::Kind::Truncated);
    REQUIRE(parse_kind([] { parse_graph6(">>sparse6<<D?{"); }) == ParseError::Kind::BadHeader);
    REQUIRE(parse_kind([] { parse_graph6("\x1f"); }) == ParseError::Kind::BadHeader);
    REQUIRE(parse_kind([] { parse_graph6("D?"); }) == ParseError::Kind::Truncated);
    REQUIRE(parse_kind([] { parse_graph6("D?{?"); }) == ParseError::Kind::TrailingData);
    REQUIRE(parse_kind([] { parse_graph6(std::string("D") + char(20) + "{"); }) ==
            ParseError::Kind::BadByte);
    // 13 vertices exceeds the default cap: a size limit, not a parse failure.
    REQUIRE_THROWS_AS(parse_graph6("L" + std::string(13, '?')), SizeLimitError);
    // Multi-byte size prefix always exceeds the cap.
    REQUIRE_THROWS_AS(parse_graph6("~??" + std::string(20, '?')), SizeLimitError);
    // The cap is adjustable.
    REQUIRE(parse_graph6("L" + std::string(13, '?'), 13).vertex_count() == 13);
}

TEST_CASE("edge list parsing") {
    const Graph c4 = parse_edge_list("4\n0 1\n1 2\n2 3\n3 0\n");
    REQUIRE(c4 == cycle_graph(4));
    REQUIRE(parse_edge_list("3\n0 1\n0 1\n").edge_count() == 1); // duplicates merge
    REQUIRE(parse_edge_list("3\n\n0 2\n").edge_count() == 1);    // blank lines skipped
    REQUIRE(parse_kind([] { parse_edge_list("2\n0 0\n"); }) == ParseError::Kind::SelfLoop);
    REQUIRE(parse_kind([] { parse_edge_list("2\n0 5\n"); }) ==
            ParseError::Kind::VertexOutOfRange);
    REQUIRE(parse_kind([] { parse_edge_list("2\n0 x\n"); }) == ParseError::Kind::BadToken);
    REQUIRE(parse_kind([] { parse_edge_list(""); }) == ParseError::Kind::MissingCount);
    REQUIRE_THROWS_AS(parse_edge_list("13\n"), SizeLimitError);
}

TEST_CASE("edge_universe is sorted lexicographically") {
    REQUIRE(edge_universe(cycle_graph(4)) ==
            std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    REQUIRE(edge_universe(Graph(3)).empty());
    REQUIRE(edge_universe(complete_graph(3)) ==
            std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("complement basics") {
    REQUIRE(complement(complete_graph(4)) == Graph(4));
    // C5 is self-complementary: the complement of 0-1-2-3-4-0 is the pentagram.
    const Graph penta = complement(cycle_graph(5));
    REQUIRE(edge_universe(penta) ==
            std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});
    // Complement of K_{3,2} is K3 with K2, disjoint.
    const Graph k32bar = complement(complete_multipartite({3, 2}));
    REQUIRE(edge_universe(k32bar) ==
            std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {3, 4}});
}

TEST_CASE("complement is an involution") {
    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : testutil::labeled_graphs(n))
            REQUIRE(complement(complement(g)) == g);
    std::mt19937 rng(7);
    for (int n = 6; n <= 10; ++n)
        for (int trial = 0; trial < 50; ++trial) {
            const Graph g = testutil::random_graph(rng, n);
            REQUIRE(complement(complement(g)) == g);
        }
}

TEST_CASE("edge sets order canonically and support the usual operations") {
    EdgeSet a(5), b(5);
    a.set(0);
    a.set(3);
    b.set(1);
    REQUIRE(a.count() == 2);
    REQUIRE(b.count() == 1);
    REQUIRE(b < a); // fewer edges first
    REQUIRE(b.subset_of(a | b));
    REQUIRE((a & b).empty());
    REQUIRE(a.minus(a).empty());
    REQUIRE(a.complement_in_universe().count() == 3);
    REQUIRE(EdgeSet::full(5).count() == 5);
    REQUIRE(a.to_vector() == std::vector<EdgeId>{0, 3});
    EdgeSet c(5);
    c.set(0);
    c.set(1);
    REQUIRE(c < a); // same cardinality, smaller mask
    REQUIRE_THROWS_AS(a.test(7), std::invalid_argument);
}

TEST_CASE("builders") {
    REQUIRE(complete_graph(5).edge_count() == 10);
    REQUIRE(path_graph(4).edge_count() == 3);
    REQUIRE(cycle_graph(6).edge_count() == 6);
    const Graph k322 = complete_multipartite({3, 2, 2});
    REQUIRE(k322.vertex_count() == 7);
    REQUIRE(k322.edge_count() == 3 * 2 + 3 * 2 + 2 * 2);
    REQUIRE_FALSE(k322.has_edge(0, 1)); // same class
    REQUIRE(k322.has_edge(0, 3));
}

TEST_CASE("automorphism groups of the named graphs") {
    REQUIRE(automorphisms(complete_graph(3)).permutations.size() == 6);
    REQUIRE(automorphisms(path_graph(4)).permutations.size() == 2);
    REQUIRE(automorphisms(cycle_graph(5)).permutations.size() == 10);
    // 2K2: frozen count from the oracle run.
    Graph two_k2(4);
    two_k2.add_edge(0, 1);
    two_k2.add_edge(2, 3);
    REQUIRE(automorphisms(two_k2).permutations.size() == 8);
    REQUIRE_THROWS_AS(automorphisms(Graph(11)), SizeLimitError);
}

TEST_CASE("automorphism lists are groups and preserve adjacency") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : testutil::iso_classes(n)) {
            const auto& ps = automorphisms(g).permutations;
            REQUIRE(ps.front() == Permutation::identity(n));
            std::set<Permutation> seen(ps.begin(), ps.end());
            REQUIRE(seen.size() == ps.size());
            long fact = 1;
            for (int i = 2; i <= n; ++i) fact *= i;
            REQUIRE(fact % long(ps.size()) == 0);
            bool adjacency_ok = true, closed = true;
            for (const Permutation& p : ps) {
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        adjacency_ok =
                            adjacency_ok && g.has_edge(p[u], p[v]) == g.has_edge(u, v);
                closed = closed && seen.count(p.inverse()) == 1;
                for (const Permutation& q : ps)
                    closed = closed && seen.count(p.compose(q)) == 1;
            }
            REQUIRE(adjacency_ok);
            REQUIRE(closed);
        }
}

TEST_CASE("edge orbits partition the edge universe") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : testutil::iso_classes(n)) {
            const auto orbits = edge_orbits(g, automorphisms(g));
            std::set<EdgeId> all;
            bool disjoint = true;
            for (const auto& orbit : orbits)
                for (EdgeId e : orbit) disjoint = disjoint && all.insert(e).second;
            REQUIRE(disjoint);
            REQUIRE(int(all.size()) == g.edge_count());
        }
    const auto p4_orbits = edge_orbits(path_graph(4), automorphisms(path_graph(4)));
    REQUIRE(p4_orbits.size() == 2); // outer pair and middle edge
}

TEST_CASE("edge transitivity of the named graphs") {
    REQUIRE(is_edge_transitive(cycle_graph(5)));
    REQUIRE(is_edge_transitive(cycle_graph(4)));
    REQUIRE_FALSE(is_edge_transitive(path_graph(4)));
    Graph two_k2(4);
    two_k2.add_edge(0, 1);
    two_k2.add_edge(2, 3);
    REQUIRE(is_edge_transitive(two_k2));
    REQUIRE(is_edge_transitive(Graph(3)));  // vacuous
    REQUIRE(is_edge_transitive(Graph(12))); // vacuous even past the search cap
}

TEST_CASE("induced edge map rejects non-automorphisms") {
    const Graph p4 = path_graph(4);
    Permutation bad(4);
    bad.assign(0, 1); // 0<->1 swap maps edge 1-2 onto non-edge 0-2
    bad.assign(1, 0);
    REQUIRE_THROWS_AS(induced_edge_map(p4, bad), std::invalid_argument);
}
