#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tww/exact.hpp"
#include "tww/generators.hpp"
#include "tww/tree_decomposition.hpp"
#include "tww/treewidth_seq.hpp"
#include "tww/trigraph.hpp"

using namespace tww;

TEST_CASE("width bound table") {
    CHECK(tw_width_bound(0) == 0);
    CHECK(tw_width_bound(1) == 3);
    CHECK(tw_width_bound(2) == 6);
    CHECK(tw_width_bound(3) == 12);
    CHECK(tw_width_bound(4) == 24);
}

TEST_CASE("ktree generator produces valid decompositions of the right width") {
    for (int k = 1; k <= 4; ++k) {
        KTree kt = random_ktree(k, 40, 13 + k);
        CHECK(kt.graph.num_vertices() == 40);
        CHECK(kt.decomposition.width() == k);
        CHECK(validate_tree_decomposition(kt.graph, kt.decomposition).ok);
    }
}

TEST_CASE("tree decomposition validator catches broken invariants") {
    Graph g = path_graph(3);
    TreeDecomposition td;
    td.bags = {{0, 1}, {1, 2}};
    td.tree_edges = {{0, 1}};
    CHECK(validate_tree_decomposition(g, td).ok);

    SUBCASE("missing edge coverage") {
        TreeDecomposition bad = td;
        bad.bags[1] = {2};
        CHECK_FALSE(validate_tree_decomposition(g, bad).ok);
    }
    SUBCASE("missing vertex") {
        TreeDecomposition bad = td;
        bad.bags = {{0, 1}, {1}};
        CHECK_FALSE(validate_tree_decomposition(g, bad).ok);
    }
    SUBCASE("disconnected occurrence set") {
        Graph h(3);
        h.add_edge(0, 1);
        TreeDecomposition bad;
        bad.bags = {{0, 1}, {2}, {0}};
        bad.tree_edges = {{0, 1}, {1, 2}};
        CHECK_FALSE(validate_tree_decomposition(h, bad).ok);
    }
    SUBCASE("bag graph with a cycle") {
        TreeDecomposition bad = td;
        bad.tree_edges = {{0, 1}, {1, 0}};
        CHECK_FALSE(validate_tree_decomposition(g, bad).ok);
    }
}

TEST_CASE("min fill gives a valid decomposition") {
    for (int seed = 0; seed < 5; ++seed) {
        Graph g = gnp(25, 0.15, 600 + seed);
        TreeDecomposition td = min_fill_decomposition(g);
        CHECK(validate_tree_decomposition(g, td).ok);
    }
    TreeDecomposition kd = min_fill_decomposition(complete_graph(6));
    CHECK(kd.width() == 5);
}

TEST_CASE("clean decomposition respects its upset width contract") {
    KTree kt = random_ktree(3, 50, 42);
    CleanDecomposition cd = clean_decomposition(kt.graph, kt.decomposition);
    CHECK(validate_clean_decomposition(kt.graph, cd).ok);
    CHECK(cd.width <= kt.decomposition.width() + 1);
}

TEST_CASE("sequence from a supplied decomposition meets the width bound") {
    for (int k = 1; k <= 4; ++k) {
        for (int seed = 0; seed < 4; ++seed) {
            KTree kt = random_ktree(k, 60, 90 * k + seed);
            TwSeqResult res = tw_sequence(kt.graph, &kt.decomposition);
            ReplayResult rr = verify_sequence(kt.graph, res.seq);
            REQUIRE(rr.ok);
            CHECK(rr.width <= tw_width_bound(res.clean_width));
        }
    }
}

TEST_CASE("subgraphs of ktrees stay within the same bound") {
    for (int seed = 0; seed < 6; ++seed) {
        KTree kt = random_ktree(2, 80, 700 + seed);
        Graph g = drop_edges(kt.graph, 0.35, 900 + seed);
        TwSeqResult res = tw_sequence(g, &kt.decomposition);
        ReplayResult rr = verify_sequence(g, res.seq);
        REQUIRE(rr.ok);
        CHECK(rr.width <= tw_width_bound(2));
    }
}

TEST_CASE("driver copes with disconnected graphs and no decomposition") {
    Graph g(9);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(4, 5);  // vertex 3 isolated
    g.add_edge(6, 7);
    g.add_edge(7, 8);
    g.add_edge(8, 6);
    TwSeqResult res = tw_sequence(g, nullptr);
    ReplayResult rr = verify_sequence(g, res.seq);
    CHECK(rr.ok);
    CHECK(rr.width <= tw_width_bound(res.clean_width));
}

TEST_CASE("trees contract with width at most three") {
    for (int seed = 0; seed < 4; ++seed) {
        KTree kt = random_ktree(1, 120, 50 + seed);
        TwSeqResult res = tw_sequence(kt.graph, &kt.decomposition);
        ReplayResult rr = verify_sequence(kt.graph, res.seq);
        REQUIRE(rr.ok);
        CHECK(rr.width <= 3);
    }
}

TEST_CASE("sequence width never beats the exact optimum") {
    for (int seed = 0; seed < 5; ++seed) {
        Graph g = gnp(7, 0.4, 300 + seed);
        TwSeqResult res = tw_sequence(g, nullptr);
        ReplayResult rr = verify_sequence(g, res.seq);
        REQUIRE(rr.ok);
        CHECK(rr.width >= exact_twinwidth(g).width);
    }
}
