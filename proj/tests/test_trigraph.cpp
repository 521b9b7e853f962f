#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "tww/generators.hpp"
#include "tww/graph.hpp"
#include "tww/trigraph.hpp"

using namespace tww;

namespace {

// Reference max red degree by full scan, to pin the bucket bookkeeping.
int scan_max_red(const Trigraph& t) {
    int best = 0;
    for (int v : t.alive_vertices()) best = std::max(best, t.red_degree(v));
    return best;
}

ContractionSequence chain_all(const Graph& g) {
    ContractionSequence seq;
    seq.n = g.num_vertices();
    int acc = 0;
    for (int i = 1; i < seq.n; ++i) {
        seq.steps.push_back({acc, i, seq.n + i - 1});
        acc = seq.n + i - 1;
    }
    return seq;
}

}  // namespace

TEST_CASE("contracting true twins adds no red edge") {
    // 0 and 1 are twins in K4 minus nothing.
    Graph g = complete_graph(4);
    Trigraph t(g);
    int w = t.contract(0, 1);
    CHECK(w == 4);
    CHECK(t.num_alive() == 3);
    CHECK(t.max_red_degree() == 0);
    CHECK(t.has_black_edge(w, 2));
    CHECK(t.has_black_edge(w, 3));
}

TEST_CASE("contraction splits shared and private neighbors by color") {
    // 0-2, 1-2 shared black; 0-3 private to 0; 1-4 private to 1.
    Graph g(5);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 4);
    Trigraph t(g);
    int w = t.contract(0, 1);
    CHECK(t.has_black_edge(w, 2));
    CHECK_FALSE(t.has_red_edge(w, 2));
    CHECK(t.has_red_edge(w, 3));
    CHECK(t.has_red_edge(w, 4));
    CHECK(t.red_degree(w) == 2);
    CHECK(t.red_degree(3) == 1);
    CHECK(t.max_red_degree() == 2);
}

TEST_CASE("red edges are inherited, never downgraded to black") {
    Graph g(4);
    g.add_edge(0, 2);
    g.add_edge(1, 3);
    Trigraph t(g);
    int a = t.contract(0, 1);  // red to 2 and 3
    CHECK(t.has_red_edge(a, 2));
    CHECK(t.has_red_edge(a, 3));
    // Contract 2 and 3: both see a, but only via red, so the merge stays red.
    int b = t.contract(2, 3);
    CHECK(t.has_red_edge(a, b));
    CHECK_FALSE(t.has_black_edge(a, b));
}

TEST_CASE("contract is symmetric in its arguments") {
    Graph g = gnp(9, 0.4, 7);
    Trigraph t1(g), t2(g);
    int w1 = t1.contract(2, 6);
    int w2 = t2.contract(6, 2);
    CHECK(w1 == w2);
    CHECK(t1.black_neighbors(w1) == t2.black_neighbors(w2));
    CHECK(t1.red_neighbors(w1) == t2.red_neighbors(w2));
}

TEST_CASE("ids are stable and never reused") {
    Graph g = path_graph(4);
    Trigraph t(g);
    CHECK(t.num_ids() == 4);
    int w = t.contract(1, 2);
    CHECK(w == 4);
    CHECK(t.num_ids() == 5);
    CHECK_FALSE(t.is_alive(1));
    CHECK_FALSE(t.is_alive(2));
    CHECK(t.is_alive(w));
    std::vector<int> alive = t.alive_vertices();
    CHECK(alive == std::vector<int>{0, 3, 4});
}

TEST_CASE("max_red_degree bucket matches a full scan under random contractions") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = gnp(12, 0.3, 1000 + trial);
        Trigraph t(g);
        while (t.num_alive() > 1) {
            std::vector<int> alive = t.alive_vertices();
            int u = alive[rng() % alive.size()];
            int v = u;
            while (v == u) v = alive[rng() % alive.size()];
            t.contract(u, v);
            CHECK(t.max_red_degree() == scan_max_red(t));
        }
    }
}

TEST_CASE("origins of alive vertices partition the original vertex set") {
    std::mt19937_64 rng(55);
    Graph g = gnp(14, 0.25, 9);
    Trigraph t(g);
    for (int step = 0; step < 10; ++step) {
        std::vector<int> alive = t.alive_vertices();
        int u = alive[rng() % alive.size()];
        int v = u;
        while (v == u) v = alive[rng() % alive.size()];
        t.contract(u, v);
        std::set<int> seen;
        for (int x : t.alive_vertices()) {
            const std::vector<int>& org = t.origins(x);
            CHECK(std::is_sorted(org.begin(), org.end()));
            for (int o : org) {
                CHECK(o < 14);
                CHECK(seen.insert(o).second);  // no vertex owned twice
            }
        }
        CHECK(static_cast<int>(seen.size()) == 14);
    }
}

TEST_CASE("replay accepts a straight chain and reports its width profile") {
    Graph g = path_graph(5);
    ContractionSequence seq = chain_all(g);
    ReplayResult rr = replay(g, seq);
    CHECK(rr.ok);
    CHECK(rr.final_vertices == 1);
    CHECK(rr.width_profile.size() == seq.steps.size());
    CHECK(rr.width == *std::max_element(rr.width_profile.begin(), rr.width_profile.end()));
}

TEST_CASE("replay rejects malformed steps at the right index") {
    Graph g = path_graph(4);

    SUBCASE("wrong fresh id") {
        ContractionSequence seq{4, {{0, 1, 7}}, std::nullopt};
        ReplayResult rr = replay(g, seq);
        CHECK_FALSE(rr.ok);
        CHECK(rr.error_step == 0);
    }
    SUBCASE("contracting a retired vertex") {
        ContractionSequence seq{4, {{0, 1, 4}, {0, 2, 5}}, std::nullopt};
        ReplayResult rr = replay(g, seq);
        CHECK_FALSE(rr.ok);
        CHECK(rr.error_step == 1);
    }
    SUBCASE("self contraction") {
        ContractionSequence seq{4, {{2, 2, 4}}, std::nullopt};
        CHECK_FALSE(replay(g, seq).ok);
    }
    SUBCASE("vertex out of range") {
        ContractionSequence seq{4, {{0, 9, 4}}, std::nullopt};
        CHECK_FALSE(replay(g, seq).ok);
    }
    SUBCASE("wrong n") {
        ContractionSequence seq{3, {{0, 1, 3}}, std::nullopt};
        CHECK_FALSE(replay(g, seq).ok);
    }
}

TEST_CASE("replay allows partial sequences but verify_sequence does not") {
    Graph g = cycle_graph(6);
    ContractionSequence seq{6, {{0, 1, 6}}, std::nullopt};
    CHECK(replay(g, seq).ok);
    ReplayResult rr = verify_sequence(g, seq);
    CHECK_FALSE(rr.ok);
}

TEST_CASE("verify_sequence enforces the claimed width") {
    Graph g = path_graph(5);
    ContractionSequence seq = chain_all(g);
    int width = replay(g, seq).width;
    CHECK(width > 0);

    seq.claimed_width = width;
    CHECK(verify_sequence(g, seq).ok);
    seq.claimed_width = width + 3;
    CHECK(verify_sequence(g, seq).ok);
    seq.claimed_width = width - 1;
    CHECK_FALSE(verify_sequence(g, seq).ok);
}

TEST_CASE("neighborhood classes group by identical colored traces") {
    // 0 and 1 both see {4 black}; 2 sees {4, 5}; 3 sees {5}.
    Graph g(6);
    g.add_edge(0, 4);
    g.add_edge(1, 4);
    g.add_edge(2, 4);
    g.add_edge(2, 5);
    g.add_edge(3, 5);
    Trigraph t(g);
    auto cls = neighborhood_classes(t, {0, 1, 2, 3}, {4, 5});
    REQUIRE(cls.size() == 3);
    bool found_pair = false;
    for (const auto& c : cls)
        if (c.members == std::vector<int>{0, 1}) {
            found_pair = true;
            CHECK(c.black_trace == std::vector<int>{4});
            CHECK(c.red_trace.empty());
        }
    CHECK(found_pair);
}

TEST_CASE("neighborhood classes distinguish red from black traces") {
    Graph g(5);
    g.add_edge(0, 2);
    g.add_edge(1, 3);
    g.add_edge(4, 2);
    Trigraph t(g);
    int w = t.contract(0, 1);  // red to 2 and 3
    // w and 4 both touch 2, but w via red and 4 via black.
    auto cls = neighborhood_classes(t, {w, 4}, {2});
    CHECK(cls.size() == 2);
}

TEST_CASE("relabel_steps maps a component sequence onto host ids") {
    Graph host(6);
    host.add_edge(1, 3);
    host.add_edge(3, 5);  // component {1, 3, 5} is a path
    host.add_edge(0, 2);  // component {0, 2}
    std::vector<int> comp = {1, 3, 5};
    Graph sub = induced_subgraph(host, comp);

    ContractionSequence sub_seq = chain_all(sub);
    CHECK(replay(sub, sub_seq).ok);

    int host_fresh = 6;
    std::vector<ContractionStep> steps =
        relabel_steps(sub_seq.steps, 3, comp, host_fresh);
    CHECK(host_fresh == 8);

    // Finish the host graph: other component, the isolated vertex 4, then
    // join the survivors.
    ContractionSequence full{6, steps, std::nullopt};
    full.steps.push_back({0, 2, 8});
    full.steps.push_back({7, 8, 9});
    full.steps.push_back({9, 4, 10});
    ReplayResult rr = verify_sequence(host, full);
    CHECK(rr.ok);
}

TEST_CASE("replay width is invariant under vertex relabeling") {
    std::mt19937_64 rng(77);
    Graph g = gnp(10, 0.35, 31);
    ContractionSequence seq = chain_all(g);
    int base = replay(g, seq).width;

    std::vector<int> perm(10);
    for (int i = 0; i < 10; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(10);
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);

    ContractionSequence seq2;
    seq2.n = 10;
    int acc = perm[0];
    for (int i = 1; i < 10; ++i) {
        seq2.steps.push_back({acc, perm[i], 10 + i - 1});
        acc = 10 + i - 1;
    }
    CHECK(replay(h, seq2).width == base);
}
