// test_coloring.cpp

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starcrit/coloring.hpp"
#include "starcrit/enumerate.hpp"
#include "starcrit/families.hpp"
#include "test_util.hpp"

using namespace starcrit;

namespace {

Graph p(int n) { return standard(Family::Path, n); }
Graph c(int n) { return standard(Family::Cycle, n); }
Graph complete(int n) { return standard(Family::Complete, n); }

Coloring col(std::vector<int> v) { return Coloring::of(std::move(v)); }

}  // namespace

TEST_CASE("is_proper") {
    CHECK(is_proper(p(4), col({1, 2, 1, 2})));
    CHECK_FALSE(is_proper(complete(3), col({1, 1, 2})));
    CHECK(is_proper(c(5), col({1, 2, 1, 2, 3})));
    CHECK_THROWS_AS(is_proper(p(4), col({1, 2, 1})), std::invalid_argument);
}

TEST_CASE("find_bicolored_p4") {
    auto w = find_bicolored_p4(p(4), col({1, 2, 1, 2}));
    REQUIRE(w);
    CHECK(w->path == std::array<int, 4>{0, 1, 2, 3});
    CHECK(w->color_ac == 1);
    CHECK(w->color_bd == 2);

    CHECK_FALSE(find_bicolored_p4(p(4), col({1, 2, 3, 1})).has_value());

    auto wc4 = find_bicolored_p4(c(4), col({1, 2, 1, 2}));
    REQUIRE(wc4);
    CHECK(wc4->path == std::array<int, 4>{0, 1, 2, 3});  // smallest normalized rotation

    CHECK_THROWS_AS(find_bicolored_p4(complete(3), col({1, 1, 2})), std::invalid_argument);
}

TEST_CASE("find_bicolored_p4 agrees with the naive full scan") {
    auto rng = testutil::make_rng(41);
    int tested = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 4 + testutil::rand_below(rng, 5);
        Graph g = testutil::random_graph(rng, n, 0.45);
        std::vector<int> colors = testutil::random_proper_coloring(rng, g, 2 + testutil::rand_below(rng, 3));
        if (colors.empty()) continue;
        ++tested;
        Coloring cc = col(colors);
        CHECK(find_bicolored_p4(g, cc).has_value() == testutil::naive_partial_bicolored_p4(g, colors));
    }
    CHECK(tested > 200);
}

TEST_CASE("is_star_coloring") {
    CHECK(is_star_coloring(p(4), col({1, 2, 3, 1})));
    CHECK_FALSE(is_star_coloring(p(4), col({1, 2, 1, 2})));
    CHECK_FALSE(is_star_coloring(complete(3), col({1, 1, 2})));  // improper, no throw
    // the paper's (n-1)-star coloring of the horn graph at n=6
    CHECK(is_star_coloring(horn(6), col({1, 2, 3, 4, 5, 1})));
}

TEST_CASE("two_class_union_is_star_forest") {
    CHECK(two_class_union_is_star_forest(p(4), col({1, 2, 3, 1}), 1, 2));
    CHECK_FALSE(two_class_union_is_star_forest(p(4), col({1, 2, 1, 2}), 1, 2));
    CHECK(two_class_union_is_star_forest(p(4), col({1, 2, 3, 1}), 2, 2));
    CHECK_THROWS_AS(two_class_union_is_star_forest(complete(3), col({1, 1, 2}), 1, 2), std::invalid_argument);
}

TEST_CASE("star coloring is exactly all-pairs star-forest unions") {
    auto rng = testutil::make_rng(77);
    int tested = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + testutil::rand_below(rng, 7);
        Graph g = testutil::random_graph(rng, n, 0.4);
        std::vector<int> colors = testutil::random_proper_coloring(rng, g, 2 + testutil::rand_below(rng, 4));
        if (colors.empty()) continue;
        ++tested;
        Coloring cc = col(colors);
        bool star = is_star_coloring(g, cc);
        bool all_pairs = true;
        for (int i = 1; i <= cc.k && all_pairs; ++i)
            for (int j = i + 1; j <= cc.k && all_pairs; ++j)
                if (!two_class_union_is_star_forest(g, cc, i, j)) all_pairs = false;
        CHECK(star == all_pairs);
    }
    CHECK(tested > 150);
}

TEST_CASE("chromatic_number on fixed graphs") {
    CHECK(chromatic_number(complete(5)).k == 5);
    CHECK(chromatic_number(c(5)).k == 3);
    CHECK(chromatic_number(p(4)).k == 2);
    auto r = chromatic_number(c(5));
    CHECK(is_proper(c(5), r.coloring));
}

TEST_CASE("star_chromatic_number on fixed graphs, cross-checked by the oracle") {
    struct Case {
        Graph g;
        int expected;
    };
    std::vector<Case> cases;
    cases.push_back({p(4), 3});
    cases.push_back({horn(6), 5});
    cases.push_back({double_horn(7), 5});
    cases.push_back({standard(Family::Star, 5), 2});
    cases.push_back({c(5), 4});
    cases.push_back({complete(4), 4});
    cases.push_back({Graph::from_edge_list(4, {{0, 1}, {2, 3}}), 2});

    for (const Case& tc : cases) {
        CHECK(star_chromatic_number_oracle(tc.g) == tc.expected);
        ColoringResult r = star_chromatic_number(tc.g);
        CHECK(r.k == tc.expected);
        CHECK(is_star_coloring(tc.g, r.coloring));
        CHECK(r.coloring.k == tc.expected);
    }
}

TEST_CASE("oracle rejects n > 9") {
    CHECK_THROWS_AS(star_chromatic_number_oracle(Graph(10)), std::invalid_argument);
}

TEST_CASE("normalization renames colors in first-use order") {
    Coloring cc = col({3, 1, 3, 2}).normalized();
    CHECK(cc.colors == std::vector<int>{1, 2, 1, 3});
    CHECK(cc.k == 3);
}

TEST_CASE("solver equals oracle on every connected graph up to 7 vertices") {
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            int oracle = star_chromatic_number_oracle(g);
            ColoringResult r = star_chromatic_number(g);
            CHECK(r.k == oracle);
            CHECK(is_star_coloring(g, r.coloring));
        }
    }
}

TEST_CASE("solver equals oracle on random graphs with up to 9 vertices") {
    auto rng = testutil::make_rng(2024);
    for (int trial = 0; trial < 250; ++trial) {
        int n = 1 + testutil::rand_below(rng, 9);
        double density[] = {0.2, 0.35, 0.5, 0.65, 0.8};
        Graph g = testutil::random_graph(rng, n, density[trial % 5]);
        CHECK(star_chromatic_number(g).k == star_chromatic_number_oracle(g));
    }
}

TEST_CASE("chi <= chi_s <= n, and chi_s = n only for complete graphs") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            int chi = chromatic_number(g).k;
            int chi_s = star_chromatic_number(g).k;
            CHECK(chi <= chi_s);
            CHECK(chi_s <= n);
            CHECK((chi_s == n) == g.is_complete());
        }
    }
}

TEST_CASE("edge monotonicity: chi_s(G-e) <= chi_s(G)") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : enumerate_connected(n)) {
            int chi_s = star_chromatic_number(g).k;
            for (const Edge& e : g.edges()) CHECK(star_chromatic_number(g.delete_edge(e)).k <= chi_s);
        }
    }
}

TEST_CASE("capped solver matches the plain solver") {
    auto rng = testutil::make_rng(5);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + testutil::rand_below(rng, 8);
        Graph g = testutil::random_graph(rng, n, 0.5);
        int exact = star_chromatic_number(g).k;
        for (int cap = 1; cap <= n + 1; ++cap)
            CHECK(star_chromatic_number_capped(g, cap) == std::min(exact, cap));
    }
}

TEST_CASE("disconnected graphs solve as the max over components") {
    // D_5 per its definition: isolated vertex + a 4-path
    Graph d5 = double_horn(5);
    REQUIRE_FALSE(d5.is_connected());
    CHECK(star_chromatic_number(d5).k == 3);
    CHECK(star_chromatic_number_oracle(d5) == 3);

    auto rng = testutil::make_rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + testutil::rand_below(rng, 7);
        Graph g = testutil::random_graph(rng, n, 0.3);
        ColoringResult r = star_chromatic_number(g);
        CHECK(r.k == star_chromatic_number_oracle(g));
        CHECK(is_star_coloring(g, r.coloring));
    }
}

TEST_CASE("solver rejects the empty graph") {
    CHECK_THROWS_AS(star_chromatic_number(Graph(0)), std::invalid_argument);
    CHECK_THROWS_AS(chromatic_number(Graph(0)), std::invalid_argument);
}
