#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tww/exact.hpp"
#include "tww/generators.hpp"
#include "tww/graph.hpp"
#include "tww/trigraph.hpp"

using namespace tww;

TEST_CASE("cographs have width zero") {
    CHECK(exact_twinwidth(complete_graph(6)).width == 0);
    CHECK(exact_twinwidth(star_graph(7)).width == 0);
    CHECK(exact_twinwidth(Graph(5)).width == 0);  // edgeless
    // C4 = complete bipartite K22, still a cograph.
    CHECK(exact_twinwidth(cycle_graph(4)).width == 0);
}

TEST_CASE("the four-vertex path is the smallest width-one graph") {
    CHECK(exact_twinwidth(path_graph(4)).width == 1);
    CHECK(exhaustive_twinwidth(path_graph(4)) == 1);
}

TEST_CASE("long cycles have width two") {
    CHECK(exhaustive_twinwidth(cycle_graph(5)) == 2);
    CHECK(exact_twinwidth(cycle_graph(5)).width == 2);
    CHECK(exact_twinwidth(cycle_graph(7)).width == 2);
}

TEST_CASE("witness sequences replay to the reported width") {
    for (int seed = 0; seed < 8; ++seed) {
        Graph g = gnp(7, 0.4, 100 + seed);
        ExactResult res = exact_twinwidth(g);
        REQUIRE_FALSE(res.exceeded_budget);
        ReplayResult rr = verify_sequence(g, res.witness);
        CHECK(rr.ok);
        CHECK(rr.width == res.width);
    }
}

TEST_CASE("solver agrees with plain enumeration on every five-vertex graph") {
    std::vector<Graph> all = all_graphs_up_to_iso(5);
    CHECK(all.size() == 34);
    for (const Graph& g : all) {
        int naive = exhaustive_twinwidth(g);
        ExactResult res = exact_twinwidth(g);
        CHECK(naive == res.width);
    }
}

TEST_CASE("solver agrees with plain enumeration on random seven-vertex graphs") {
    for (int seed = 0; seed < 12; ++seed) {
        double p = 0.15 + 0.1 * (seed % 7);
        Graph g = gnp(7, p, 500 + seed);
        CHECK(exhaustive_twinwidth(g) == exact_twinwidth(g).width);
    }
}

TEST_CASE("decision procedure brackets the optimum") {
    Graph g = cycle_graph(6);
    int width = exact_twinwidth(g).width;
    CHECK(width >= 1);
    CHECK_FALSE(has_d_sequence(g, width - 1));
    ContractionSequence witness;
    CHECK(has_d_sequence(g, width, &witness));
    ReplayResult rr = verify_sequence(g, witness);
    CHECK(rr.ok);
    CHECK(rr.width <= width);
}

TEST_CASE("budget stops the search once the width is known to exceed it") {
    ExactResult res = exact_twinwidth(path_graph(4), 10, 0);
    CHECK(res.exceeded_budget);
    ExactResult fine = exact_twinwidth(path_graph(4), 10, 5);
    CHECK_FALSE(fine.exceeded_budget);
    CHECK(fine.width == 1);
}

TEST_CASE("vertex cap is enforced") {
    CHECK_THROWS(exact_twinwidth(path_graph(12), 10));
}

TEST_CASE("graph catalog sizes match the isomorphism counts") {
    CHECK(all_graphs_up_to_iso(1).size() == 1);
    CHECK(all_graphs_up_to_iso(2).size() == 2);
    CHECK(all_graphs_up_to_iso(3).size() == 4);
    CHECK(all_graphs_up_to_iso(4).size() == 11);
    CHECK(all_graphs_up_to_iso(5).size() == 34);
}
