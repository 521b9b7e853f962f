#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "tww/embedding.hpp"
#include "tww/generators.hpp"
#include "tww/graph.hpp"

using namespace tww;

namespace {

// Euler count for a connected plane graph: n - m + f == 2.
void check_euler(const Graph& g, const RotationSystem& rs) {
    auto fs = faces(g, rs);
    CHECK(g.num_vertices() - g.num_edges() + static_cast<int>(fs.size()) == 2);
}

}  // namespace

TEST_CASE("dodecahedron embedding has twelve pentagonal faces") {
    Graph g = dodecahedron();
    RotationSystem rs = dodecahedron_embedding();
    CHECK(g.num_vertices() == 20);
    CHECK(g.num_edges() == 30);
    CHECK(validate_embedding(g, rs).ok);
    auto fs = faces(g, rs);
    REQUIRE(fs.size() == 12);
    for (const auto& f : fs) CHECK(f.length() == 5);
    check_euler(g, rs);
}

TEST_CASE("embedding validator rejects rotations that are not permutations") {
    Graph g = cycle_graph(3);
    RotationSystem rs;
    rs.rotation = {{1, 2}, {0, 2}, {0, 1}};
    rs.outer_face = 0;
    CHECK(validate_embedding(g, rs).ok);

    RotationSystem bad = rs;
    bad.rotation[0] = {1, 1};
    CHECK_FALSE(validate_embedding(g, bad).ok);

    RotationSystem missing = rs;
    missing.rotation[2] = {0};
    CHECK_FALSE(validate_embedding(g, missing).ok);

    RotationSystem badface = rs;
    badface.outer_face = 99;
    CHECK_FALSE(validate_embedding(g, badface).ok);
}

TEST_CASE("triangulation closes every face into triangles and keeps the graph planar") {
    for (int n : {6, 9, 14}) {
        Graph g = cycle_graph(n);
        RotationSystem rs;
        rs.rotation.resize(n);
        for (int i = 0; i < n; ++i) rs.rotation[i] = {(i + n - 1) % n, (i + 1) % n};
        rs.outer_face = 0;
        REQUIRE(validate_embedding(g, rs).ok);

        Triangulation tri = triangulate(g, rs);
        CHECK(validate_embedding(tri.graph, tri.embedding).ok);
        auto fs = faces(tri.graph, tri.embedding);
        for (const auto& f : fs) CHECK(f.length() == 3);
        // The triangulation is a supergraph on the same vertex set.
        CHECK(tri.graph.num_vertices() >= g.num_vertices());
        for (auto [u, v] : g.edges()) CHECK(tri.graph.has_edge(u, v));
        int tn = tri.graph.num_vertices();
        CHECK(tri.graph.num_edges() == 3 * tn - 6);
        check_euler(tri.graph, tri.embedding);
    }

    // A pentagonal-faced input: every face gains chords or apex vertices.
    Triangulation dd = triangulate(dodecahedron(), dodecahedron_embedding());
    CHECK(validate_embedding(dd.graph, dd.embedding).ok);
    for (const auto& f : faces(dd.graph, dd.embedding)) CHECK(f.length() == 3);
}

TEST_CASE("random planar triangulations satisfy the maximal planar counts") {
    for (int n : {10, 50, 120}) {
        Triangulation tri = random_planar_triangulation(n, 5);
        CHECK(tri.graph.num_vertices() == n);
        CHECK(tri.graph.num_edges() == 3 * n - 6);
        CHECK(validate_embedding(tri.graph, tri.embedding).ok);
        auto fs = faces(tri.graph, tri.embedding);
        CHECK(static_cast<int>(fs.size()) == 2 * n - 4);
        for (const auto& f : fs) CHECK(f.length() == 3);
    }
}

TEST_CASE("random triangulations are deterministic per seed") {
    Triangulation a = random_planar_triangulation(40, 9);
    Triangulation b = random_planar_triangulation(40, 9);
    CHECK(a.graph.edges() == b.graph.edges());
    CHECK(a.embedding.rotation == b.embedding.rotation);
    Triangulation c = random_planar_triangulation(40, 10);
    CHECK(a.graph.edges() != c.graph.edges());
}

TEST_CASE("face walks traverse each directed edge exactly once") {
    Triangulation tri = random_planar_triangulation(30, 3);
    auto fs = faces(tri.graph, tri.embedding);
    std::set<std::pair<int, int>> darts;
    for (const auto& f : fs) {
        int len = f.length();
        for (int i = 0; i < len; ++i) {
            auto dart = std::make_pair(f.walk[i], f.walk[(i + 1) % len]);
            CHECK(darts.insert(dart).second);
        }
    }
    CHECK(static_cast<int>(darts.size()) == 2 * tri.graph.num_edges());
}

TEST_CASE("bfs layering starts at the root and steps one layer at a time") {
    Triangulation tri = random_planar_triangulation(60, 12);
    int root = default_root(tri.graph, tri.embedding);
    BfsLayering lay = bfs_layering(tri.graph, tri.embedding, root);
    CHECK(lay.root == root);
    CHECK(lay.layer[root] == 0);
    CHECK(lay.parent[root] == -1);
    auto dist = bfs_distances(tri.graph, root);
    for (int v = 0; v < tri.graph.num_vertices(); ++v) {
        CHECK(lay.layer[v] == dist[v]);
        if (v != root) {
            CHECK(lay.parent[v] >= 0);
            CHECK(lay.layer[lay.parent[v]] == lay.layer[v] - 1);
            CHECK(tri.graph.has_edge(v, lay.parent[v]));
        }
    }
}

TEST_CASE("default root lies on the outer face") {
    Triangulation tri = random_planar_triangulation(25, 7);
    auto fs = faces(tri.graph, tri.embedding);
    int root = default_root(tri.graph, tri.embedding);
    const auto& outer = fs[tri.embedding.outer_face].walk;
    CHECK(std::find(outer.begin(), outer.end(), root) != outer.end());
}
