#include "tww/bipartite.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>

namespace tww {

namespace {

void check_n(int n) {
    if (n < 1 || n > 20) throw std::invalid_argument("bipartite power graph: n must be in [1, 20]");
}

}  // namespace

Graph bipartite_power_graph(int n) {
    check_n(n);
    const int full = 1 << n;
    Graph g(n + full);
    for (int mask = 1; mask < full; ++mask)
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) g.add_edge(i, n + mask);
    return g;
}

int bipartite_default_k(int n) {
    check_n(n);
    int fl = 0;
    while ((2 << fl) <= n) ++fl;  // fl = floor(log2 n)
    return std::max(1, fl - 1);
}

long bipartite_ub_bound(int n, int k) {
    check_n(n);
    if (k < 1 || k > n) throw std::invalid_argument("bipartite bound: k must be in [1, n]");
    return std::max({1L << k, static_cast<long>(n - k), static_cast<long>(k + 1)});
}

BipartiteUb bipartite_ub_sequence(int n, int k) {
    check_n(n);
    if (k < 0) k = bipartite_default_k(n);
    if (k < 1 || k > n) throw std::invalid_argument("bipartite sequence: k must be in [1, n]");

    Graph g = bipartite_power_graph(n);
    Trigraph t(g);
    BipartiteUb out;
    out.k = k;
    out.bound = bipartite_ub_bound(n, k);
    out.seq.n = g.num_vertices();
    auto contract = [&](int u, int v) {
        int a = std::min(u, v), b = std::max(u, v);
        int w = t.contract(a, b);
        out.seq.steps.push_back({a, b, w});
        return w;
    };

    // Subsets sharing a trace on the pivot [0, k) collapse onto the smallest
    // mask of their class; the merged blobs end red-adjacent to every
    // non-pivot element and still black on the pivot.
    const int high = 1 << (n - k);
    std::vector<int> reps(1 << k);
    for (int tmask = 0; tmask < (1 << k); ++tmask) {
        int rep = n + tmask;
        for (int h = 1; h < high; ++h) rep = contract(rep, n + (tmask | (h << k)));
        reps[tmask] = rep;
    }

    // Non-pivot elements are now twins (red to every subset blob).
    int xstar = -1;
    if (k < n) {
        xstar = k;
        for (int i = k + 1; i < n; ++i) xstar = contract(xstar, i);
    }

    // Merge the subset blobs; the survivor is red to the pivot and to xstar.
    int ystar = reps[0];
    for (size_t i = 1; i < reps.size(); ++i) ystar = contract(ystar, reps[i]);

    // Absorb the pivot, then the merged non-pivot element.
    int acc = ystar;
    for (int i = 0; i < k; ++i) acc = contract(acc, i);
    if (xstar >= 0) acc = contract(acc, xstar);

    assert(t.num_alive() == 1);
    ReplayResult rr = replay(g, out.seq);
    if (!rr.ok || rr.final_vertices != 1)
        throw std::logic_error("bipartite sequence failed replay: " + rr.error);
    if (rr.width > out.bound) throw std::logic_error("bipartite sequence exceeded its bound");
    out.seq.claimed_width = rr.width;
    return out;
}

int bipartite_lower_bound(int n) {
    check_n(n);
    for (int k = 1; k <= n; ++k) {
        long lhs = (1L << (n - 1)) - static_cast<long>(n) * (1L << (n - k)) - 1;
        if (lhs > n - k) return n - k + 1;
    }
    return 0;
}

BipartiteAudit audit_bipartite_sequence(int n, const ContractionSequence& seq) {
    check_n(n);
    Graph g = bipartite_power_graph(n);
    BipartiteAudit out;
    if (seq.n != g.num_vertices()) {
        out.ok = false;
        out.error = "sequence vertex count does not match the power graph";
        return out;
    }

    Trigraph t(g);
    const int total = g.num_vertices() + static_cast<int>(seq.steps.size());
    std::vector<char> has_elem(total, 0);
    std::vector<uint64_t> norig(total, 1);
    for (int i = 0; i < n; ++i) has_elem[i] = 1;

    auto check_vertex = [&](int z) -> bool {
        if (has_elem[z]) return true;
        int d = t.red_degree(z);
        if (d >= 40) return true;
        return norig[z] <= (1ull << d);
    };

    for (size_t i = 0; i < seq.steps.size(); ++i) {
        const auto& st = seq.steps[i];
        if (st.u < 0 || st.v < 0 || st.u >= t.num_ids() || st.v >= t.num_ids() || st.u == st.v ||
            !t.is_alive(st.u) || !t.is_alive(st.v)) {
            out.ok = false;
            out.error = "invalid step " + std::to_string(i);
            return out;
        }
        if (has_elem[st.u] || has_elem[st.v]) break;  // audit window ends
        int w = t.contract(st.u, st.v);
        if (w != st.w) {
            out.ok = false;
            out.error = "step " + std::to_string(i) + " names the wrong merged vertex";
            return out;
        }
        has_elem[w] = has_elem[st.u] || has_elem[st.v];
        norig[w] = norig[st.u] + norig[st.v];
        out.steps_checked = static_cast<int>(i) + 1;
        out.max_red_seen = std::max(out.max_red_seen, t.max_red_degree());

        if (!check_vertex(w)) {
            out.ok = false;
            out.error = "vertex " + std::to_string(w) + " holds " + std::to_string(norig[w]) +
                        " originals with red degree " + std::to_string(t.red_degree(w));
            return out;
        }
        for (int z : t.red_neighbors(w))
            if (!check_vertex(z)) {
                out.ok = false;
                out.error = "vertex " + std::to_string(z) + " holds " + std::to_string(norig[z]) +
                            " originals with red degree " + std::to_string(t.red_degree(z));
                return out;
            }
    }
    return out;
}

}  // namespace tww
