#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tww/bipartite.hpp"
#include "tww/exact.hpp"
#include "tww/trigraph.hpp"

using namespace tww;

TEST_CASE("power graph shape") {
    Graph g = bipartite_power_graph(3);
    CHECK(g.num_vertices() == 3 + 8);
    // Each of the 3 elements lies in 4 of the 7 nonempty subsets.
    CHECK(g.num_edges() == 12);
    CHECK(g.has_edge(0, 3 + 0b001));
    CHECK(g.has_edge(2, 3 + 0b111));
    CHECK_FALSE(g.has_edge(0, 3 + 0b110));
    CHECK(g.degree(3) == 0);  // the empty-set vertex is isolated
    CHECK_THROWS(bipartite_power_graph(0));
    CHECK_THROWS(bipartite_power_graph(21));
}

TEST_CASE("default pivot size") {
    CHECK(bipartite_default_k(2) == 1);
    CHECK(bipartite_default_k(4) == 1);
    CHECK(bipartite_default_k(8) == 2);
    CHECK(bipartite_default_k(15) == 2);
    CHECK(bipartite_default_k(16) == 3);
    CHECK(bipartite_default_k(20) == 3);
}

TEST_CASE("bound formula") {
    CHECK(bipartite_ub_bound(8, 1) == 7);   // n - k dominates
    CHECK(bipartite_ub_bound(8, 2) == 6);
    CHECK(bipartite_ub_bound(8, 4) == 16);  // 2^k dominates
    CHECK(bipartite_ub_bound(4, 3) == 8);
    CHECK(bipartite_ub_bound(2, 1) == 2);   // k + 1 dominates
    CHECK_THROWS(bipartite_ub_bound(8, 0));
    CHECK_THROWS(bipartite_ub_bound(8, 9));
}

TEST_CASE("sequences are valid and within the bound for every pivot size") {
    for (int n = 1; n <= 7; ++n) {
        Graph g = bipartite_power_graph(n);
        for (int k = 1; k <= n; ++k) {
            BipartiteUb ub = bipartite_ub_sequence(n, k);
            CHECK(ub.k == k);
            CHECK(ub.bound == bipartite_ub_bound(n, k));
            ReplayResult rr = verify_sequence(g, ub.seq);
            REQUIRE(rr.ok);
            CHECK(rr.width <= ub.bound);
            BipartiteAudit audit = audit_bipartite_sequence(n, ub.seq);
            CHECK(audit.ok);
        }
    }
}

TEST_CASE("default pivot is used when k is omitted") {
    BipartiteUb ub = bipartite_ub_sequence(8);
    CHECK(ub.k == bipartite_default_k(8));
    Graph g = bipartite_power_graph(8);
    ReplayResult rr = verify_sequence(g, ub.seq);
    REQUIRE(rr.ok);
    CHECK(rr.width <= ub.bound);
}

TEST_CASE("the two-element graph is solved exactly") {
    Graph g = bipartite_power_graph(2);
    ExactResult res = exact_twinwidth(g);
    CHECK(res.width == 1);
    CHECK(bipartite_lower_bound(2) <= res.width);
}

TEST_CASE("counting lower bound values") {
    CHECK(bipartite_lower_bound(2) == 0);
    CHECK(bipartite_lower_bound(8) == 4);
    CHECK(bipartite_lower_bound(16) == 11);
    CHECK(bipartite_lower_bound(20) == 15);
    // Monotone in n.
    for (int n = 2; n <= 20; ++n)
        CHECK(bipartite_lower_bound(n - 1) <= bipartite_lower_bound(n));
}

TEST_CASE("lower bound never exceeds the constructed width") {
    for (int n = 2; n <= 10; ++n) {
        Graph g = bipartite_power_graph(n);
        BipartiteUb ub = bipartite_ub_sequence(n);
        ReplayResult rr = verify_sequence(g, ub.seq);
        REQUIRE(rr.ok);
        CHECK(bipartite_lower_bound(n) <= rr.width);
    }
}

TEST_CASE("audit accepts the constructed sequence and reports progress") {
    BipartiteUb ub = bipartite_ub_sequence(9);
    BipartiteAudit audit = audit_bipartite_sequence(9, ub.seq);
    CHECK(audit.ok);
    CHECK(audit.steps_checked > 0);
    CHECK(audit.max_red_seen <= ub.bound);
}

TEST_CASE("audit rejects sequences for the wrong graph size") {
    BipartiteUb ub = bipartite_ub_sequence(5);
    BipartiteAudit audit = audit_bipartite_sequence(6, ub.seq);
    CHECK_FALSE(audit.ok);
}

TEST_CASE("audit window closes at the first element contraction") {
    // Contract two element vertices immediately: nothing gets audited, but
    // the sequence itself is not condemned.
    int n = 4;
    Graph g = bipartite_power_graph(n);
    ContractionSequence seq;
    seq.n = g.num_vertices();
    int acc = 0;
    for (int i = 1; i < seq.n; ++i) {
        seq.steps.push_back({acc, i, seq.n + i - 1});
        acc = seq.n + i - 1;
    }
    REQUIRE(verify_sequence(g, seq).ok);
    BipartiteAudit audit = audit_bipartite_sequence(n, seq);
    CHECK(audit.ok);
    CHECK(audit.steps_checked == 0);
}

TEST_CASE("the origin count certificate holds along any valid subset contraction") {
    // A blob of subset vertices always keeps every origin inside the interval
    // between its common intersection and its union, so origins can never
    // outnumber 2^(red degree). Chaining all subsets saturates the bound.
    int n = 5;
    Graph g = bipartite_power_graph(n);
    ContractionSequence seq;
    seq.n = g.num_vertices();
    int fresh = seq.n;
    int acc = n + 1;  // subset {0}
    for (int mask = 2; mask < (1 << n); ++mask)
        seq.steps.push_back({acc, n + mask, (acc = fresh++)});
    ReplayResult rr = replay(g, seq);
    REQUIRE(rr.ok);  // a legal (if wide) partial sequence
    BipartiteAudit audit = audit_bipartite_sequence(n, seq);
    CHECK(audit.ok);
    CHECK(audit.steps_checked == static_cast<int>(seq.steps.size()));
    CHECK(audit.max_red_seen == n);
}

TEST_CASE("audit rejects malformed steps") {
    int n = 4;
    SUBCASE("retired vertex reused") {
        ContractionSequence seq;
        seq.n = n + (1 << n);
        seq.steps.push_back({n + 1, n + 2, seq.n});
        seq.steps.push_back({n + 1, n + 3, seq.n + 1});
        BipartiteAudit audit = audit_bipartite_sequence(n, seq);
        CHECK_FALSE(audit.ok);
        CHECK_FALSE(audit.error.empty());
    }
    SUBCASE("wrong fresh id") {
        ContractionSequence seq;
        seq.n = n + (1 << n);
        seq.steps.push_back({n + 1, n + 2, seq.n + 5});
        BipartiteAudit audit = audit_bipartite_sequence(n, seq);
        CHECK_FALSE(audit.ok);
    }
}
