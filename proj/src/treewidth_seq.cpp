#include "tww/treewidth_seq.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace tww {

long tw_width_bound(int w) {
    if (w <= 0) return 0;
    if (w > 60) throw std::invalid_argument("tw_width_bound: width out of range");
    return 3L << (w - 1);
}

namespace {

[[noreturn]] void breach(int node, const std::string& what) {
    throw std::logic_error("tw_contraction_sequence: invariant breach at node " +
                           std::to_string(node) + ": " + what);
}

}  // namespace

ContractionSequence tw_contraction_sequence(const Graph& g, const CleanDecomposition& cd) {
    int n = g.num_vertices();
    if (n == 0) throw std::invalid_argument("tw_contraction_sequence: empty graph");
    if (!is_connected(g)) throw std::invalid_argument("tw_contraction_sequence: graph must be connected");
    {
        ValidationReport rep = validate_clean_decomposition(g, cd);
        if (!rep.ok) throw std::invalid_argument("tw_contraction_sequence: " + rep.errors.front());
    }

    std::vector<std::vector<int>> children(n);
    int root = -1;
    for (int v = 0; v < n; ++v) {
        if (cd.parent[v] < 0) {
            if (root >= 0) throw std::invalid_argument("tw_contraction_sequence: connected graph with two roots");
            root = v;
        } else {
            children[cd.parent[v]].push_back(v);
        }
    }

    // Post-order over the tree; children are processed by ascending subtree
    // size (ties by id) for a deterministic step order.
    std::vector<int> post;
    post.reserve(n);
    {
        std::vector<std::pair<int, size_t>> stack{{root, 0}};
        while (!stack.empty()) {
            auto& [x, ci] = stack.back();
            if (ci < children[x].size()) {
                stack.emplace_back(children[x][ci++], 0);
            } else {
                post.push_back(x);
                stack.pop_back();
            }
        }
    }
    std::vector<int> subtree_size(n, 1);
    for (int v : post)
        for (int c : children[v]) subtree_size[v] += subtree_size[c];
    for (int v = 0; v < n; ++v)
        std::sort(children[v].begin(), children[v].end(), [&](int a, int b) {
            return std::make_pair(subtree_size[a], a) < std::make_pair(subtree_size[b], b);
        });

    Trigraph t(g);
    ContractionSequence seq;
    seq.n = n;
    int width_seen = 0;
    auto do_contract = [&](int a, int b) {
        int u = std::min(a, b), v = std::max(a, b);
        int w = t.contract(u, v);
        seq.steps.push_back(ContractionStep{u, v, w});
        width_seen = std::max(width_seen, t.max_red_degree());
        return w;
    };

    // Contracts equal-neighborhood members of xs over the evaluation set.
    // Classes are handled by ascending smallest member. Under the block
    // invariants every class has at most two members, no member shows red
    // toward the evaluation set, and contractions leave traces intact.
    auto merge_classes = [&](std::vector<int> xs, std::vector<int> eval, int node) {
        std::sort(xs.begin(), xs.end());
        std::sort(eval.begin(), eval.end());
        std::vector<NeighborhoodClass> classes = neighborhood_classes(t, xs, eval);
        std::sort(classes.begin(), classes.end(),
                  [](const NeighborhoodClass& a, const NeighborhoodClass& b) {
                      return a.members.front() < b.members.front();
                  });
        std::vector<int> out;
        for (const NeighborhoodClass& c : classes) {
            if (!c.red_trace.empty()) breach(node, "red edge leaves a block");
            if (c.members.size() > 2) breach(node, "class of size " + std::to_string(c.members.size()));
            int cur = c.members.front();
            for (size_t i = 1; i < c.members.size(); ++i) cur = do_contract(cur, c.members[i]);
            out.push_back(cur);
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    long block_cap = cd.width <= 25 ? 1L << cd.width : -1;
    std::vector<std::vector<int>> block(n);

    for (int v : post) {
        const std::vector<int>& fsv = cd.upsets[v];
        std::vector<int> run;
        bool have_run = false;
        for (int u : children[v]) {
            std::vector<int> eval = cd.upsets[u];
            eval.erase(std::remove(eval.begin(), eval.end(), v), eval.end());
            std::vector<int> refined = merge_classes(std::move(block[u]), std::move(eval), v);
            if (block_cap > 0 && static_cast<long>(refined.size()) > std::max(block_cap / 2, 1L))
                breach(v, "refined block too large");
            if (!have_run) {
                run = std::move(refined);
                have_run = true;
            } else {
                run.insert(run.end(), refined.begin(), refined.end());
                run = merge_classes(std::move(run), fsv, v);
            }
        }
        run.push_back(v);
        block[v] = merge_classes(std::move(run), fsv, v);
        if (block_cap > 0 && static_cast<long>(block[v].size()) > block_cap) breach(v, "block too large");

        // Red edges incident to the finished block must stay inside it.
        std::set<int> inside(block[v].begin(), block[v].end());
        for (int x : block[v])
            for (int r : t.red_neighbors(x))
                if (!inside.count(r)) breach(v, "red edge leaves the finished block");
    }

    if (static_cast<int>(seq.steps.size()) != n - 1 || t.num_alive() != 1)
        breach(root, "construction did not reach a single vertex");
    if (width_seen > tw_width_bound(std::max(cd.width, 1)))
        breach(root, "width cap exceeded: saw " + std::to_string(width_seen));
    seq.claimed_width = width_seen;
    return seq;
}

namespace {

// td restricted to the induced subgraph on comp (host ids, ascending): bags
// intersected and reindexed, tree shape kept. Validity carries over.
TreeDecomposition restrict_decomposition(const TreeDecomposition& td, const std::vector<int>& comp,
                                         const std::vector<int>& sub_index) {
    TreeDecomposition out;
    out.bags.resize(td.bags.size());
    for (size_t i = 0; i < td.bags.size(); ++i)
        for (int v : td.bags[i])
            if (std::binary_search(comp.begin(), comp.end(), v)) out.bags[i].push_back(sub_index[v]);
    out.tree_edges = td.tree_edges;
    return out;
}

}  // namespace

TwSeqResult tw_sequence(const Graph& g, const TreeDecomposition* td) {
    TwSeqResult res;
    res.seq.n = g.num_vertices();
    if (g.num_vertices() == 0) {
        res.seq.claimed_width = 0;
        return res;
    }
    if (td != nullptr) {
        ValidationReport rep = validate_tree_decomposition(g, *td);
        if (!rep.ok) throw std::invalid_argument("tw_sequence: invalid decomposition: " + rep.errors.front());
    }

    std::vector<int> sub_index(g.num_vertices(), -1);
    int host_fresh = g.num_vertices();
    std::vector<int> reps;
    for (const std::vector<int>& comp : connected_components(g)) {
        for (size_t i = 0; i < comp.size(); ++i) sub_index[comp[i]] = static_cast<int>(i);
        Graph sub = induced_subgraph(g, comp);
        TreeDecomposition sub_td =
            td != nullptr ? restrict_decomposition(*td, comp, sub_index) : min_fill_decomposition(sub);
        CleanDecomposition cd = clean_decomposition(sub, sub_td);
        res.clean_width = std::max(res.clean_width, cd.width);
        ContractionSequence cseq = tw_contraction_sequence(sub, cd);
        int base = host_fresh;
        std::vector<ContractionStep> steps =
            relabel_steps(cseq.steps, static_cast<int>(comp.size()), comp, host_fresh);
        res.seq.steps.insert(res.seq.steps.end(), steps.begin(), steps.end());
        reps.push_back(comp.size() == 1 ? comp[0] : base + static_cast<int>(comp.size()) - 2);
    }
    // The component representatives are pairwise non-adjacent isolated
    // vertices by now; contracting them adds no red edges.
    for (size_t i = 1; i < reps.size(); ++i) {
        int a = std::min(reps[i - 1], reps[i]), b = std::max(reps[i - 1], reps[i]);
        res.seq.steps.push_back(ContractionStep{a, b, host_fresh});
        reps[i] = host_fresh++;
    }

    ReplayResult rr = replay(g, res.seq);
    if (!rr.ok || rr.final_vertices != 1)
        throw std::logic_error("tw_sequence: stitched sequence fails replay: " + rr.error);
    res.seq.claimed_width = rr.width;
    return res;
}

}  // namespace tww
