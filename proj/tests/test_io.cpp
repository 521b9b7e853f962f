#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "tww/generators.hpp"
#include "tww/io.hpp"

using namespace tww;

namespace {

bool same_graph(const Graph& a, const Graph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    for (auto [u, v] : a.edges())
        if (!b.has_edge(u, v)) return false;
    return true;
}

}  // namespace

TEST_CASE("edge list round trip") {
    Graph g = gnp(9, 0.4, 3);
    std::ostringstream os;
    write_edge_list(os, g);
    std::istringstream is(os.str());
    CHECK(same_graph(parse_edge_list(is), g));
}

TEST_CASE("edge list accepts comments and rejects bad counts") {
    std::istringstream ok("3 1\n# a comment\n0 2\n");
    Graph g = parse_edge_list(ok);
    CHECK(g.num_vertices() == 3);
    CHECK(g.has_edge(0, 2));

    std::istringstream short_file("3 2\n0 1\n");
    CHECK_THROWS_AS(parse_edge_list(short_file), ParseError);
    std::istringstream oob("2 1\n0 5\n");
    CHECK_THROWS_AS(parse_edge_list(oob), ParseError);
}

TEST_CASE("graph6 known encodings") {
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(complete_graph(3)) == "Bw");
    CHECK(same_graph(parse_graph6("Bw"), complete_graph(3)));
    CHECK(same_graph(parse_graph6(">>graph6<<Bw"), complete_graph(3)));
}

TEST_CASE("graph6 round trip over random graphs") {
    for (int seed = 0; seed < 6; ++seed) {
        Graph g = gnp(5 + seed * 11, 0.3, 40 + seed);
        CHECK(same_graph(parse_graph6(to_graph6(g)), g));
    }
}

TEST_CASE("graph6 rejects truncated and corrupt input") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);       // bits missing
    CHECK_THROWS_AS(parse_graph6("Bw\x01"), ParseError);  // byte out of range
}

TEST_CASE("pace gr round trip, comments, duplicate edges") {
    Graph g = gnp(8, 0.5, 11);
    std::ostringstream os;
    write_pace_gr(os, g);
    std::istringstream is(os.str());
    CHECK(same_graph(parse_pace_gr(is), g));

    std::istringstream dup("c hi\np tw 3 3\n1 2\n2 1\n2 3\n");
    Graph d = parse_pace_gr(dup);
    CHECK(d.num_edges() == 2);

    std::istringstream loop("p tw 2 1\n1 1\n");
    CHECK_THROWS_AS(parse_pace_gr(loop), ParseError);
    std::istringstream nohdr("1 2\n");
    CHECK_THROWS_AS(parse_pace_gr(nohdr), ParseError);
}

TEST_CASE("pace td round trip preserves bags and tree edges") {
    KTree kt = random_ktree(3, 20, 5);
    std::ostringstream os;
    write_pace_td(os, kt.decomposition, kt.graph.num_vertices());
    std::istringstream is(os.str());
    TreeDecomposition td = parse_pace_td(is);
    REQUIRE(td.bags.size() == kt.decomposition.bags.size());
    CHECK(td.bags == kt.decomposition.bags);
    CHECK(td.tree_edges.size() == kt.decomposition.tree_edges.size());
    CHECK(td.width() == kt.decomposition.width());
}

TEST_CASE("json graph round trip and schema errors") {
    Graph g = gnp(7, 0.45, 21);
    CHECK(same_graph(graph_from_json(graph_to_json(g)), g));
    CHECK_THROWS_AS(graph_from_json("{\"n\": 2}"), ParseError);
    CHECK_THROWS_AS(graph_from_json("{\"n\": 2, \"edges\": [[0, 7]]}"), ParseError);
    CHECK_THROWS_AS(graph_from_json("not json"), ParseError);
}

TEST_CASE("json sequence round trip keeps the claimed width tri-state") {
    ContractionSequence seq{4, {{0, 1, 4}, {4, 2, 5}, {5, 3, 6}}, std::nullopt};
    ContractionSequence back = sequence_from_json(sequence_to_json(seq));
    CHECK(back == seq);
    seq.claimed_width = 2;
    back = sequence_from_json(sequence_to_json(seq));
    CHECK(back == seq);
}

TEST_CASE("json sequence serialization is byte deterministic") {
    ContractionSequence seq{3, {{0, 2, 3}, {3, 1, 4}}, 1};
    CHECK(sequence_to_json(seq) == sequence_to_json(seq));
}

TEST_CASE("json branch decomposition round trip") {
    BranchDecomposition bd;
    bd.num_nodes = 4;
    bd.tree_edges = {{0, 3}, {1, 3}, {2, 3}};
    bd.leaf_map = {{0, {0, 1}}, {1, {1, 2}}, {2, {0, 2}}};
    BranchDecomposition back = branch_decomposition_from_json(branch_decomposition_to_json(bd));
    CHECK(back.num_nodes == bd.num_nodes);
    CHECK(back.tree_edges == bd.tree_edges);
    CHECK(back.leaf_map == bd.leaf_map);
}

TEST_CASE("json rotation system round trip") {
    RotationSystem rs = dodecahedron_embedding();
    RotationSystem back = rotation_from_json(rotation_to_json(rs));
    CHECK(back.rotation == rs.rotation);
    CHECK(back.outer_face == rs.outer_face);
}

TEST_CASE("load_graph infers formats from extension and content") {
    Graph g = gnp(6, 0.5, 77);
    std::string base = "/tmp/tww_io_test";

    write_file(base + ".json", graph_to_json(g));
    CHECK(same_graph(load_graph(base + ".json"), g));

    write_file(base + ".g6", to_graph6(g) + "\n");
    CHECK(same_graph(load_graph(base + ".g6"), g));

    std::ostringstream gr;
    write_pace_gr(gr, g);
    write_file(base + ".gr", gr.str());
    CHECK(same_graph(load_graph(base + ".gr"), g));

    std::ostringstream el;
    write_edge_list(el, g);
    write_file(base + ".txt", el.str());
    CHECK(same_graph(load_graph(base + ".txt"), g));

    // No helpful extension: sniff the content via the graph6 banner.
    write_file(base + ".data", ">>graph6<<" + to_graph6(g) + "\n");
    CHECK(same_graph(load_graph(base + ".data"), g));

    CHECK_THROWS(load_graph("/tmp/tww_io_missing_file.json"));

    for (const char* ext : {".json", ".g6", ".gr", ".txt", ".data"})
        std::remove((base + ext).c_str());
}

TEST_CASE("read_file and write_file round trip") {
    std::string path = "/tmp/tww_io_rw.txt";
    write_file(path, "alpha\nbeta\n");
    CHECK(read_file(path) == "alpha\nbeta\n");
    std::remove(path.c_str());
}
