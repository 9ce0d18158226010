#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include <bettiforge/graph.hpp>

#include "test_support.hpp"

using namespace bettiforge;

TEST_CASE("make_graph normalizes and validates", "[graph]") {
    Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);

    Graph k2 = make_graph(2, {{0, 1}, {1, 0}});
    CHECK(k2.edge_count() == 1);

    CHECK_THROWS_AS(make_graph(1, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(-1, {}), std::invalid_argument);
}

TEST_CASE("join counts and relabeling", "[graph]") {
    CHECK(join(complete(1), complete(1)) == complete(2));
    CHECK(join(empty_graph(2), empty_graph(2)).edge_count() == 4);
    CHECK(join(empty_graph(2), empty_graph(2)) == complete_multipartite({2, 2}));

    Graph w6 = join(cycle_graph(5), complete(1));
    CHECK(w6.vertex_count() == 6);
    CHECK(w6.edge_count() == 10);  // 5 rim + 5 spokes
    CHECK(w6 == wheel_graph(6));

    Graph g1 = make_graph(3, {{0, 1}}), g2 = make_graph(2, {{0, 1}});
    CHECK(join(g1, g2).edge_count() == g1.edge_count() + g2.edge_count() + 3 * 2);
}

TEST_CASE("join symmetry under block swap and associativity", "[graph]") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        int n1 = 1 + trial % 4, n2 = 1 + (trial / 4) % 4;
        Graph g1 = test_support::random_graph(n1, 0.5, rng);
        Graph g2 = test_support::random_graph(n2, 0.5, rng);
        // relabel join(g1,g2) by the block swap v -> v+n2 / v -> v-n1
        std::vector<int> perm(n1 + n2);
        for (int v = 0; v < n1; ++v) perm[v] = v + n2;
        for (int v = 0; v < n2; ++v) perm[n1 + v] = v;
        CHECK(test_support::relabel(join(g1, g2), perm) == join(g2, g1));

        Graph g3 = test_support::random_graph(2, 0.5, rng);
        CHECK(join(join(g1, g2), g3) == join(g1, join(g2, g3)));
    }
}

TEST_CASE("induced subgraphs", "[graph]") {
    CHECK(induced_subgraph(complete(4), std::vector<int>{0, 1, 2}) == complete(3));
    CHECK(induced_subgraph(cycle_graph(5), std::vector<int>{0, 1, 3}) ==
          make_graph(3, {{0, 1}}));
    CHECK(induced_subgraph(cycle_graph(6), std::vector<int>{0, 2, 4}) == empty_graph(3));
    CHECK(induced_subgraph(cycle_graph(5), cycle_graph(5).vertex_mask()) == cycle_graph(5));
    CHECK_THROWS_AS(induced_subgraph(complete(3), std::vector<int>{0, 3}),
                    std::invalid_argument);
}

TEST_CASE("connectivity", "[graph]") {
    CHECK(is_connected(cycle_graph(5)));
    CHECK_FALSE(is_connected(empty_graph(2)));
    CHECK(is_connected(complete(1)));
    CHECK(is_connected(empty_graph(0)));

    CHECK(connected_components(empty_graph(3)) ==
          std::vector<std::vector<int>>{{0}, {1}, {2}});
    CHECK(connected_components(make_graph(3, {{0, 1}})) ==
          std::vector<std::vector<int>>{{0, 1}, {2}});
    CHECK(connected_components(cycle_graph(4)) ==
          std::vector<std::vector<int>>{{0, 1, 2, 3}});
}

TEST_CASE("family constructors", "[graph]") {
    CHECK(complete(4).edge_count() == 6);
    CHECK(complete_multipartite({6, 6}).edge_count() == 36);
    CHECK(wheel_graph(6).edge_count() == 10);
    CHECK(star_graph(3).edge_count() == 3);
    CHECK(star_graph(3).has_edge(0, 1));  // hub labeled 0
    CHECK(path_graph(1).edge_count() == 0);

    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(wheel_graph(3), std::invalid_argument);
    CHECK_THROWS_AS(complete_multipartite({}), std::invalid_argument);
    CHECK_THROWS_AS(complete_multipartite({2, 0}), std::invalid_argument);
}

TEST_CASE("family composition identities", "[graph]") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            CHECK(complete(a + b) == join(complete(a), complete(b)));
            if (a >= 1)
                CHECK(complete_multipartite({a, b}) == join(empty_graph(a), empty_graph(b)));
        }
}

TEST_CASE("r-independence predicate", "[graph]") {
    Graph c5 = cycle_graph(5);
    // consecutive triples induce a 3-vertex path, everything else splits
    CHECK_FALSE(is_r_independent(c5, 0b00111, 2));
    CHECK(is_r_independent(c5, 0b01011, 2));
    CHECK(is_r_independent(c5, 0, 1));
    CHECK(is_r_independent(complete(4), 0b1111, 4));
    CHECK_FALSE(is_r_independent(complete(4), 0b1111, 3));
}
