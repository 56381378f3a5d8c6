// test_patterns.cpp

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starcrit/enumerate.hpp"
#include "starcrit/families.hpp"
#include "starcrit/patterns.hpp"
#include "test_util.hpp"

using namespace starcrit;

namespace {

const std::vector<PatternKind> all_kinds{PatternKind::I3, PatternKind::TwoK2, PatternKind::I4,
                                         PatternKind::TwoK2PlusK1, PatternKind::P3PlusP2};

Graph c(int n) { return standard(Family::Cycle, n); }
Graph complete(int n) { return standard(Family::Complete, n); }

}  // namespace

TEST_CASE("pattern orders and edge counts") {
    CHECK(pattern_order(PatternKind::I3) == 3);
    CHECK(pattern_order(PatternKind::TwoK2) == 4);
    CHECK(pattern_order(PatternKind::I4) == 4);
    CHECK(pattern_order(PatternKind::TwoK2PlusK1) == 5);
    CHECK(pattern_order(PatternKind::P3PlusP2) == 5);
    CHECK(pattern_edge_count(PatternKind::I3) == 0);
    CHECK(pattern_edge_count(PatternKind::TwoK2) == 2);
    CHECK(pattern_edge_count(PatternKind::I4) == 0);
    CHECK(pattern_edge_count(PatternKind::TwoK2PlusK1) == 2);
    CHECK(pattern_edge_count(PatternKind::P3PlusP2) == 3);
}

TEST_CASE("witnesses in horn graphs match the edge-deletion cases") {
    Graph h5 = horn(5);

    // deleting the pendant edge leaves the independent triple {v3,v4,v5}
    auto i3 = find_induced(h5.delete_edge(Edge(3, 4)), PatternKind::I3);
    REQUIRE(i3);
    CHECK(i3->vertices == std::vector<int>{2, 3, 4});
    CHECK(witness_valid(h5.delete_edge(Edge(3, 4)), *i3));

    // deleting v1 v4 pairs the pendant edge v4v5 with v1v3
    auto k2s = find_induced(h5.delete_edge(Edge(0, 3)), PatternKind::TwoK2);
    REQUIRE(k2s);
    CHECK(k2s->vertices == std::vector<int>{0, 2, 3, 4});
    CHECK(witness_valid(h5.delete_edge(Edge(0, 3)), *k2s));
}

TEST_CASE("C5 has no independent triple") {
    CHECK_FALSE(find_induced(c(5), PatternKind::I3).has_value());
    CHECK(testutil::naive_max_independent_set(c(5)) == 2);
}

TEST_CASE("double-horn edge deletion exposes P3+P2 exactly as in the proof") {
    Graph d6 = double_horn(6);
    auto w = find_induced(d6.delete_edge(Edge(2, 3)), PatternKind::P3PlusP2);
    REQUIRE(w);
    CHECK(w->vertices == std::vector<int>{0, 2, 4, 3, 5});
    CHECK(witness_valid(d6.delete_edge(Edge(2, 3)), *w));
}

TEST_CASE("is_free") {
    CHECK(is_free(complete(6), {PatternKind::I3, PatternKind::TwoK2}));
    CHECK(is_free(horn(6), {PatternKind::I3, PatternKind::TwoK2}));
    CHECK_FALSE(is_free(c(6), {PatternKind::TwoK2}));
    auto w = find_induced(c(6), PatternKind::TwoK2);
    REQUIRE(w);
    CHECK(w->vertices == std::vector<int>{0, 1, 3, 4});
}

TEST_CASE("contains_p4_subgraph") {
    CHECK(contains_p4_subgraph(complete(4)));
    CHECK_FALSE(contains_p4_subgraph(standard(Family::Star, 5)));
    CHECK(contains_p4_subgraph(c(4)));
    CHECK_FALSE(contains_p4_subgraph(complete(3)));
    CHECK_FALSE(contains_p4_subgraph(Graph(1)));
}

TEST_CASE("is_star_graph") {
    CHECK(is_star_graph(standard(Family::Star, 5)));
    CHECK_FALSE(is_star_graph(Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}})));
    CHECK(is_star_graph(Graph(1)));
    CHECK(is_star_graph(complete(2)));
    CHECK_FALSE(is_star_graph(complete(3)));                          // cycle
    CHECK_FALSE(is_star_graph(Graph::from_edge_list(4, {{0, 1}, {2, 3}})));  // disconnected
}

TEST_CASE("complement conditions on fixed graphs") {
    CHECK(complement_is_c3c4_free(horn(6)));
    CHECK_FALSE(complement_is_c3c4_free(Graph::from_edge_list(4, {{0, 1}, {2, 3}})));  // complement is C4
    CHECK(complement_is_c3c4_free(complete(5)));
    CHECK(complement_is_c3c4_free(c(5)));  // self-complementary, no triangle, no C4

    CHECK(complement_is_k4_free(double_horn(6)));
    CHECK_FALSE(complement_is_k4_free(Graph(4)));  // I4 itself
    CHECK(complement_is_k4_free(complete(4)));
}

TEST_CASE("detectors agree with the naive subset oracle on all connected graphs up to 7") {
    // includes soundness: every reported witness re-validates
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            for (PatternKind kind : all_kinds) {
                auto w = find_induced(g, kind);
                CHECK(w.has_value() == testutil::naive_has_induced(g, kind));
                if (w) CHECK(witness_valid(g, *w));
            }
        }
    }
}

TEST_CASE("detectors agree with the naive oracle on random graphs, including disconnected") {
    auto rng = testutil::make_rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + testutil::rand_below(rng, 8);
        Graph g = testutil::random_graph(rng, n, 0.25 + 0.1 * (trial % 6));
        for (PatternKind kind : all_kinds) {
            auto w = find_induced(g, kind);
            CHECK(w.has_value() == testutil::naive_has_induced(g, kind));
            if (w) CHECK(witness_valid(g, *w));
        }
        CHECK(contains_p4_subgraph(g) == testutil::naive_has_p4_subgraph(g));
        // induced 2K2 in g <=> induced C4 in the complement
        CHECK(find_induced(g, PatternKind::TwoK2).has_value() == testutil::naive_has_induced_c4(g.complement()));
    }
}

TEST_CASE("I3-freeness is independence number at most 2") {
    auto rng = testutil::make_rng(3);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 1 + testutil::rand_below(rng, 7);
        Graph g = testutil::random_graph(rng, n, 0.5);
        CHECK(is_free(g, {PatternKind::I3}) == (testutil::naive_max_independent_set(g) <= 2));
    }
}

TEST_CASE("lemma route for P4 detection agrees with the scan on connected graphs") {
    for (int n = 4; n <= 7; ++n)
        for (const Graph& g : enumerate_connected(n))
            CHECK(contains_p4_subgraph(g) == contains_p4_subgraph_by_degree(g));
}
