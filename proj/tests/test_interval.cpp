#include <catch2/catch_amalgamated.hpp>

#include "fracbox/interval.hpp"
#include "helpers.hpp"

using namespace fracbox;

TEST_CASE("complete graphs collapse to a single point") {
    for (int n = 1; n <= 6; ++n) {
        const auto res = is_interval(complete_graph(n));
        REQUIRE(res.interval);
        REQUIRE(res.model->intervals ==
                std::vector<std::pair<int, int>>(n, {0, 0}));
    }
}

TEST_CASE("P4 is interval and the explicit unit-interval witness is valid too") {
    const Graph p4 = path_graph(4);
    const auto res = is_interval(p4);
    REQUIRE(res.interval);
    REQUIRE(model_matches(p4, *res.model));
    // A hand-written model placing vertex v at [v, v+1] works as well; the
    // contract is agreement with the adjacency relation, not a unique model.
    const IntervalModel unit{{{0, 1}, {1, 2}, {2, 3}, {3, 4}}};
    REQUIRE(model_matches(p4, unit));
}

TEST_CASE("C4 yields itself as the hole") {
    const auto res = is_interval(cycle_graph(4));
    REQUIRE_FALSE(res.interval);
    const auto& hole = std::get<HoleObstruction>(*res.obstruction);
    REQUIRE(hole.cycle == std::vector<int>{0, 1, 2, 3});
    REQUIRE(verify_hole(cycle_graph(4), hole));
}

TEST_CASE("longer cycles give their full length as the hole") {
    for (int n = 5; n <= 8; ++n) {
        const auto res = is_interval(cycle_graph(n));
        REQUIRE_FALSE(res.interval);
        const auto& hole = std::get<HoleObstruction>(*res.obstruction);
        REQUIRE(int(hole.cycle.size()) == n);
        REQUIRE(verify_hole(cycle_graph(n), hole));
    }
}

TEST_CASE("K_{2,3} is not interval") {
    // Frozen from the oracle: K_{2,3} contains a chordless C4.
    const Graph g = complete_multipartite({2, 3});
    const auto res = is_interval(g);
    REQUIRE_FALSE(res.interval);
    const auto& hole = std::get<HoleObstruction>(*res.obstruction);
    REQUIRE(hole.cycle.size() == 4);
    REQUIRE(verify_hole(g, hole));
}

TEST_CASE("the three-arm spider is chordal but has an asteroidal triple") {
    // Center 0 with arms 1-2, 3-4, 5-6: a tree, hence chordal, yet the three
    // leaves form an asteroidal triple.
    Graph spider(7);
    spider.add_edge(0, 1);
    spider.add_edge(1, 2);
    spider.add_edge(0, 3);
    spider.add_edge(3, 4);
    spider.add_edge(0, 5);
    spider.add_edge(5, 6);
    const auto res = is_interval(spider);
    REQUIRE_FALSE(res.interval);
    const auto& at = std::get<ATObstruction>(*res.obstruction);
    REQUIRE(at.a == 2);
    REQUIRE(at.b == 4);
    REQUIRE(at.c == 6);
    REQUIRE(verify_asteroidal_triple(spider, at));
}

TEST_CASE("labeled interval-graph counts match the frozen oracle") {
    const int expected[] = {0, 1, 2, 8, 61, 822};
    for (int n = 1; n <= 5; ++n) {
        int count = 0;
        for (const Graph& g : testutil::labeled_graphs(n))
            if (is_interval(g).interval) ++count;
        REQUIRE(count == expected[n]);
    }
}

TEST_CASE("every witness on small graphs is verifiable") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : testutil::labeled_graphs(n)) {
            const auto res = is_interval(g);
            if (res.interval)
                REQUIRE(model_matches(g, *res.model));
            else
                REQUIRE(verify_obstruction(g, *res.obstruction));
        }
}

TEST_CASE("interval graphs are hereditary under vertex deletion") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : testutil::iso_classes(n)) {
            if (!is_interval(g).interval) continue;
            for (int drop = 0; drop < n; ++drop) {
                Graph h(n - 1);
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v) {
                        if (u == drop || v == drop || !g.has_edge(u, v)) continue;
                        const int uu = u - (u > drop), vv = v - (v > drop);
                        h.add_edge(uu, vv);
                    }
                REQUIRE(is_interval(h).interval);
            }
        }
}

TEST_CASE("the quick recognizer agrees with the witnessed one") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : testutil::labeled_graphs(n))
            REQUIRE(detail::interval_quick(g) == is_interval(g).interval);
}

TEST_CASE("cointerval edge sets of the complement of C4") {
    // gbar = 2K2 with universe [(0,2),(1,3)].
    const Graph gbar = complement(cycle_graph(4));
    EdgeSet one(2), both(2), none(2);
    one.set(0);
    both.set(0);
    both.set(1);
    REQUIRE(is_cointerval_edge_set(gbar, none)); // complement is K4
    REQUIRE(is_cointerval_edge_set(gbar, one));  // complement is K4 minus an edge
    REQUIRE_FALSE(is_cointerval_edge_set(gbar, both)); // complement is C4
    REQUIRE_THROWS_AS(is_cointerval_edge_set(gbar, EdgeSet(5)), std::invalid_argument);
}

TEST_CASE("cointerval subsets of C5 as host") {
    // Frozen: C5 has 16 cointerval edge subsets (including the empty one)
    // and the largest have size 3 (the five consecutive edge triples).
    const Graph c5 = cycle_graph(5);
    const int m = 5;
    int count = 0, largest = 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        EdgeSet e(m);
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1u) e.set(i);
        if (is_cointerval_edge_set(c5, e)) {
            ++count;
            largest = std::max(largest, e.count());
        }
    }
    REQUIRE(count == 16);
    REQUIRE(largest == 3);
}

TEST_CASE("recognition output is deterministic") {
    const Graph g = complete_multipartite({2, 3});
    const auto first = is_interval(g);
    const auto second = is_interval(g);
    REQUIRE(std::get<HoleObstruction>(*first.obstruction).cycle ==
            std::get<HoleObstruction>(*second.obstruction).cycle);
}
