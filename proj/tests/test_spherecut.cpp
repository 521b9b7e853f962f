#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tww/branch_decomposition.hpp"
#include "tww/embedding.hpp"
#include "tww/exact.hpp"
#include "tww/generators.hpp"
#include "tww/spherecut_seq.hpp"
#include "tww/trigraph.hpp"

using namespace tww;

TEST_CASE("class limit and width bound tables") {
    CHECK(noose_class_limit(1) == 0);
    CHECK(noose_class_limit(3) == 8);
    CHECK(noose_class_limit(5) == 16);
    CHECK(noose_class_limit(10) == 36);

    CHECK(bw_width_bound(1) == 4);
    CHECK(bw_width_bound(2) == 8);
    CHECK(bw_width_bound(3) == 12);
    CHECK(bw_width_bound(5) == 20);
    CHECK(bw_width_bound(6) == 24);
    CHECK(bw_width_bound(7) == 29);  // the ceil(9k/2) - 3 arm takes over
    CHECK(bw_width_bound(9) == 38);
}

TEST_CASE("tight examples realise the class limit exactly") {
    for (int k = 3; k <= 8; ++k) {
        TightExample ex = tight_example(k);
        CHECK(validate_embedding(ex.graph, ex.embedding).ok);
        CHECK(static_cast<int>(ex.noose.size()) == k);
        NooseCertificate cert = verify_noose_bound(ex.graph, ex.embedding, ex.noose);
        CHECK(cert.k == k);
        CHECK(cert.bound == 4 * k - 4);
        CHECK(cert.class_count == cert.bound);
    }
}

TEST_CASE("noose certificates on random triangulations stay within the limit") {
    std::mt19937_64 rng(4242);
    Triangulation tri = random_planar_triangulation(50, 17);
    const Graph& g = tri.graph;
    int done = 0;
    for (int trial = 0; trial < 500 && done < 60; ++trial) {
        // Random closed walk shrunk to a simple cycle.
        std::vector<int> at(g.num_vertices(), -1), walk;
        int v = static_cast<int>(rng() % g.num_vertices());
        std::vector<int> cyc;
        while (cyc.empty()) {
            if (at[v] >= 0) {
                cyc.assign(walk.begin() + at[v], walk.end());
                break;
            }
            at[v] = static_cast<int>(walk.size());
            walk.push_back(v);
            const auto& nb = g.neighbors(v);
            v = nb[rng() % nb.size()];
        }
        if (cyc.size() < 3) continue;
        NooseCertificate cert = verify_noose_bound(g, tri.embedding, cyc);
        CHECK(cert.class_count <= cert.bound);
        CHECK(cert.inside_vertices + cert.outside_vertices ==
              g.num_vertices() - static_cast<int>(cyc.size()));
        ++done;
    }
    CHECK(done >= 30);
}

TEST_CASE("caterpillar decomposition of a cycle has width two") {
    Graph g = cycle_graph(12);
    std::vector<int> order(g.num_edges());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    BranchDecomposition bd = caterpillar_decomposition(g, order);
    CHECK(validate_branch_decomposition(g, bd).ok);
    // g.edges() lists a cycle's edges consecutively except the closing edge.
    CHECK(branch_width(g, bd) <= 3);
}

TEST_CASE("exact branchwidth on small graphs") {
    // A two-edge path still admits middle sets of size one; from three edges
    // on, the leaf of an interior edge shares both endpoints with the rest.
    CHECK(exact_branchwidth(path_graph(3)) == 1);
    CHECK(exact_branchwidth(star_graph(4)) == 1);
    CHECK(exact_branchwidth(path_graph(5)) == 2);
    CHECK(exact_branchwidth(cycle_graph(5)) == 2);
    CHECK(exact_branchwidth(complete_graph(4)) == 3);
}

TEST_CASE("forest decomposition stays within width two and drives the engine") {
    for (int seed = 0; seed < 5; ++seed) {
        KTree kt = random_ktree(1, 60, 2024 + seed);
        const Graph& g = kt.graph;
        BranchDecomposition bd = tree_branch_decomposition(g);
        CHECK(validate_branch_decomposition(g, bd).ok);
        CHECK(branch_width(g, bd) <= 2);
        ContractionSequence seq = bw_contraction_sequence(g, bd);
        ReplayResult rr = verify_sequence(g, seq);
        REQUIRE(rr.ok);
        CHECK(rr.width <= bw_width_bound(2));
    }
}

TEST_CASE("star components bypass the engine with width zero") {
    Graph g = star_graph(9);
    BwSeqResult res = bw_sequence(g);
    ReplayResult rr = verify_sequence(g, res.seq);
    REQUIRE(rr.ok);
    CHECK(rr.width == 0);
}

TEST_CASE("driver output respects the bound implied by its decomposition width") {
    for (int seed = 0; seed < 4; ++seed) {
        Graph g = random_outerplanar(40, 3000 + seed);
        BwSeqResult res = bw_sequence(g);
        ReplayResult rr = verify_sequence(g, res.seq);
        REQUIRE(rr.ok);
        CHECK(res.k >= 1);
        CHECK(rr.width <= bw_width_bound(res.k));
    }
    Graph grid = grid_graph(4, 7);
    BwSeqResult res = bw_sequence(grid);
    ReplayResult rr = verify_sequence(grid, res.seq);
    REQUIRE(rr.ok);
    CHECK(rr.width <= bw_width_bound(res.k));
}

TEST_CASE("driver handles disconnected input and isolated vertices") {
    Graph g(11);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    g.add_edge(6, 7);
    g.add_edge(7, 4);  // vertex 3 and 8..10 isolated
    BwSeqResult res = bw_sequence(g);
    ReplayResult rr = verify_sequence(g, res.seq);
    REQUIRE(rr.ok);
    CHECK(rr.width <= bw_width_bound(std::max(res.k, 1)));
}

TEST_CASE("pendant extension keeps the core decomposition width") {
    // A 4-cycle with a pendant path hanging off vertex 0.
    Graph g(7);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    g.add_edge(0, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    std::vector<int> core_vertices = {0, 1, 2, 3};
    Graph core = induced_subgraph(g, core_vertices);  // ids match: 0..3
    std::vector<int> order = {0, 1, 2, 3};
    BranchDecomposition core_bd = caterpillar_decomposition(core, order);
    BranchDecomposition full = extend_for_degree_one(g, core_bd);
    CHECK(validate_branch_decomposition(g, full).ok);
    CHECK(branch_width(g, full) <= std::max(branch_width(core, core_bd), 2));
}

TEST_CASE("engine width never beats the exact optimum") {
    for (int seed = 0; seed < 4; ++seed) {
        Graph g = random_outerplanar(7, 5000 + seed);
        BwSeqResult res = bw_sequence(g);
        ReplayResult rr = verify_sequence(g, res.seq);
        REQUIRE(rr.ok);
        CHECK(rr.width >= exact_twinwidth(g).width);
    }
}
