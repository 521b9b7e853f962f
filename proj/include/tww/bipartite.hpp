#pragma once

#include <string>

#include "tww/graph.hpp"
#include "tww/trigraph.hpp"

namespace tww {

// Exponential bipartite graph on a left side [n] and a right side holding
// every subset of [n]: vertex i in [0,n) is the element i, vertex n + mask is
// the subset with characteristic vector `mask`, and i is adjacent to exactly
// the subsets containing it. 1 <= n <= 20.
Graph bipartite_power_graph(int n);

// Default pivot size floor(log2(n) - 1), clamped to at least 1.
int bipartite_default_k(int n);

// Width guarantee of the pivot construction: max(2^k, n - k, k + 1).
long bipartite_ub_bound(int n, int k);

struct BipartiteUb {
    ContractionSequence seq;
    int k = 0;
    long bound = 0;
};

// Contraction sequence of the power graph with replayed width at most
// bipartite_ub_bound(n, k): collapse subsets sharing a trace on the first k
// elements (smallest mask first), merge the remaining elements, merge the
// subset representatives, then absorb the pivot elements. k = -1 picks the
// default pivot size.
BipartiteUb bipartite_ub_sequence(int n, int k = -1);

// Counting lower bound on the twin-width of the power graph: the largest
// n - k + 1 such that 2^(n-1) - n * 2^(n-k) - 1 > n - k, or 0 if none.
int bipartite_lower_bound(int n);

struct BipartiteAudit {
    bool ok = true;
    int steps_checked = 0;  // prefix applied before an element-origin merge
    int max_red_seen = 0;
    std::string error;
};

// Replays `seq` on the power graph and checks, while no contraction has yet
// involved an element origin, that every vertex made only of subset origins
// holds at most 2^d originals where d is its red degree. This is the
// invariant behind the lower bound, so valid sequences always pass.
BipartiteAudit audit_bipartite_sequence(int n, const ContractionSequence& seq);

}  // namespace tww
