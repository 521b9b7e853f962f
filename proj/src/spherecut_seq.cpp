#include "tww/spherecut_seq.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "tww/tree_decomposition.hpp"  // ValidationReport

namespace tww {

int noose_class_limit(int k) {
    if (k < 1) throw std::invalid_argument("noose_class_limit: k >= 1 required");
    return 4 * k - 4;
}

long bw_width_bound(int k) {
    if (k < 0) throw std::invalid_argument("bw_width_bound: negative width");
    return std::max(4L * k, (9L * k + 1) / 2 - 3);
}

TightExample tight_example(int k) {
    if (k < 3) throw std::invalid_argument("tight_example: k >= 3 required");
    TightExample ex;
    ex.graph = Graph(k);
    Graph& g = ex.graph;
    RotationSystem& rs = ex.embedding;
    rs.rotation.assign(k, {});
    for (int j = 0; j < k; ++j) {
        g.add_edge(j, (j + 1) % k);
        rs.rotation[j] = {(j + k - 1) % k, (j + 1) % k};
    }
    for (int j = 0; j < k; ++j) ex.noose.push_back(j);
    // The face traced from the directed edge 0->1 is the disc we fill; the
    // reverse walk is the outer face and stays empty.
    std::vector<int> outer_walk{0};
    for (int j = k - 1; j >= 1; --j) outer_walk.push_back(j);

    // Triangulate the disc with a fan from vertex 0. Each chopped-off
    // triangle walk visits (0, i, i+1) in trace order.
    std::vector<std::vector<int>> tri;
    std::vector<int> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    if (k == 3) {
        tri.push_back(cur);
    } else {
        auto [f1, f2] = insert_chord(g, rs, cur, 0, 2);
        tri.push_back(std::move(f1));  // [0, 1, 2]
        cur = std::move(f2);           // [2, ..., k-1, 0]
        while (static_cast<int>(cur.size()) > 3) {
            auto [rest, t2] = insert_chord(g, rs, cur, 1, static_cast<int>(cur.size()) - 1);
            tri.push_back(std::move(t2));  // [0, i, i+1]
            cur = std::move(rest);
        }
        tri.push_back(std::move(cur));  // [k-2, k-1, 0]
    }

    // Populate each triangle (0, i, i+1) with witnesses realising the traces
    // {0,i,i+1}, {i,i+1}, {0,i+1} and {i}; the triangle (0,1,2) additionally
    // hosts the witnesses for {0,1}, {0} and the empty trace, and the last
    // one hosts the witness for {k-1}.
    for (const std::vector<int>& w : tri) {
        int zi = -1;
        for (int j = 0; j < 3; ++j)
            if (w[j] == 0) zi = j;
        assert(zi >= 0);
        int i = std::min(w[(zi + 1) % 3], w[(zi + 2) % 3]);
        int ip1 = std::max(w[(zi + 1) % 3], w[(zi + 2) % 3]);
        assert(ip1 == i + 1);
        int t = insert_vertex_in_face(g, rs, w, {0, 1, 2});
        // New faces, in trace order: [t,0,i], [t,i,i+1], [t,i+1,0].
        int c = insert_vertex_in_face(g, rs, {t, i, ip1}, {1, 2});
        // Faces now [c,i,i+1] and [c,i+1,t,i].
        insert_vertex_in_face(g, rs, {c, i, ip1}, {1});       // trace {i}
        insert_vertex_in_face(g, rs, {t, ip1, 0}, {1, 2});    // trace {0,i+1}
        if (i == 1) {
            int c0 = insert_vertex_in_face(g, rs, {t, 0, 1}, {1, 2});  // trace {0,1}
            insert_vertex_in_face(g, rs, {c0, 0, 1}, {1});             // trace {0}
            insert_vertex_in_face(g, rs, {c0, 1, t, 0}, {2});          // empty trace
        }
        if (i == k - 2) insert_vertex_in_face(g, rs, {c, ip1, t, i}, {1});  // trace {k-1}
    }
    assert(g.num_vertices() == 5 * k - 4);

    std::vector<FaceWalk> fs = faces(g, rs);
    rs.outer_face = -1;
    for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi)
        if (fs[fi].walk == outer_walk) rs.outer_face = fi;
    if (rs.outer_face < 0) throw std::logic_error("tight_example: lost the outer face");
    ValidationReport rep = validate_embedding(g, rs);
    if (!rep.ok) throw std::logic_error("tight_example: broken embedding: " + rep.errors.front());
    return ex;
}

NooseCertificate verify_noose_bound(const Graph& g, const RotationSystem& rs,
                                    const std::vector<int>& noose) {
    ValidationReport rep = validate_embedding(g, rs);
    if (!rep.ok) throw std::invalid_argument("verify_noose_bound: invalid embedding: " + rep.errors.front());
    if (!is_connected(g)) throw std::invalid_argument("verify_noose_bound: graph must be connected");
    int n = g.num_vertices();
    int k = static_cast<int>(noose.size());
    if (k < 2) throw std::invalid_argument("verify_noose_bound: noose needs at least 2 vertices");
    std::vector<char> on_noose(n, 0);
    for (int v : noose) {
        if (v < 0 || v >= n) throw std::invalid_argument("verify_noose_bound: vertex out of range");
        if (on_noose[v]) throw std::invalid_argument("verify_noose_bound: repeated noose vertex");
        on_noose[v] = 1;
    }
    std::set<std::pair<int, int>> cyc;
    int wrap = k == 2 ? 1 : k;  // a 2-noose follows its single edge both ways
    for (int j = 0; j < wrap; ++j) {
        int a = noose[j], b = noose[(j + 1) % k];
        if (!g.has_edge(a, b))
            throw std::invalid_argument("verify_noose_bound: noose is not a cycle in the graph");
        cyc.insert(std::minmax(a, b));
    }

    // Split the faces into the two sides of the noose: flood the dual graph
    // without ever crossing a noose edge.
    std::vector<FaceWalk> fs = faces(g, rs);
    std::map<std::pair<int, int>, int> face_of;  // directed edge -> face index
    for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi) {
        const std::vector<int>& w = fs[fi].walk;
        for (size_t j = 0; j < w.size(); ++j) face_of[{w[j], w[(j + 1) % w.size()]}] = fi;
    }
    std::vector<int> region(fs.size(), -1);
    auto flood = [&](int start, int tag) {
        std::vector<int> st{start};
        region[start] = tag;
        while (!st.empty()) {
            int f = st.back();
            st.pop_back();
            const std::vector<int>& w = fs[f].walk;
            for (size_t j = 0; j < w.size(); ++j) {
                int a = w[j], b = w[(j + 1) % w.size()];
                if (cyc.count(std::minmax(a, b))) continue;
                int other = face_of.at({b, a});
                if (region[other] < 0) {
                    region[other] = tag;
                    st.push_back(other);
                }
            }
        }
    };
    flood(rs.outer_face, 0);
    int inside_seed = -1;
    for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi)
        if (region[fi] < 0) inside_seed = fi;
    if (inside_seed >= 0) flood(inside_seed, 1);
    for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi)
        if (region[fi] < 0)
            throw std::invalid_argument("verify_noose_bound: noose cuts out more than two regions");
    if (inside_seed < 0 && k >= 3)
        throw std::invalid_argument("verify_noose_bound: noose does not separate the embedding");

    std::vector<int> vside(n, -1);
    for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi)
        for (int v : fs[fi].walk) {
            if (on_noose[v]) continue;
            if (vside[v] < 0)
                vside[v] = region[fi];
            else if (vside[v] != region[fi])
                throw std::invalid_argument("verify_noose_bound: a vertex touches both sides");
        }

    std::vector<int> ins, outs, ys(noose);
    std::sort(ys.begin(), ys.end());
    for (int v = 0; v < n; ++v) {
        if (on_noose[v]) continue;
        (vside[v] == 1 ? ins : outs).push_back(v);
    }
    Trigraph t(g);
    int ci = static_cast<int>(neighborhood_classes(t, ins, ys).size());
    int co = static_cast<int>(neighborhood_classes(t, outs, ys).size());
    NooseCertificate cert;
    cert.k = k;
    cert.class_count = std::max(ci, co);
    cert.bound = noose_class_limit(k);
    cert.inside_vertices = static_cast<int>(ins.size());
    cert.outside_vertices = static_cast<int>(outs.size());
    if (cert.class_count > cert.bound)
        throw std::runtime_error("verify_noose_bound: " + std::to_string(cert.class_count) +
                                 " traces on a " + std::to_string(k) + "-noose exceed the limit " +
                                 std::to_string(cert.bound));
    return cert;
}

BranchDecomposition extend_for_degree_one(const Graph& g, const BranchDecomposition& core_bd) {
    int n = g.num_vertices();
    std::vector<int> degs(n), strip_parent(n, -2);
    std::vector<char> alive(n, 1);
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        degs[v] = g.degree(v);
        if (degs[v] <= 1) stack.push_back(v);
    }
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (!alive[v] || degs[v] > 1) continue;
        alive[v] = 0;
        strip_parent[v] = -1;
        for (int u : g.neighbors(v)) {
            if (!alive[u]) continue;
            strip_parent[v] = u;
            if (--degs[u] == 1) stack.push_back(u);
        }
    }

    std::vector<std::pair<int, int>> core_edges;
    for (auto [u, v] : g.edges())
        if (alive[u] && alive[v]) core_edges.emplace_back(std::min(u, v), std::max(u, v));
    if (core_edges.empty())
        throw std::invalid_argument("extend_for_degree_one: graph has no 2-core");
    std::vector<std::pair<int, int>> mapped;
    for (const auto& [leaf, e] : core_bd.leaf_map)
        mapped.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
    std::sort(mapped.begin(), mapped.end());
    std::sort(core_edges.begin(), core_edges.end());
    if (mapped != core_edges)
        throw std::invalid_argument("extend_for_degree_one: decomposition does not cover the core edges");
    for (int v = 0; v < n; ++v)
        if (!alive[v] && strip_parent[v] < 0 && g.degree(v) > 0)
            throw std::invalid_argument("extend_for_degree_one: tree component has no core anchor");

    int core_k = 0;
    for (const std::vector<int>& m : middle_sets(g, core_bd))
        core_k = std::max(core_k, static_cast<int>(m.size()));

    BranchDecomposition bd = core_bd;
    std::vector<std::vector<int>> kids(n);
    for (int v = 0; v < n; ++v)
        if (!alive[v] && strip_parent[v] >= 0) kids[strip_parent[v]].push_back(v);

    // Width-<=2 subtree covering the pendant edges under v plus (parent, v);
    // the cut above the returned node has middle set within {parent, v}.
    auto build_port = [&](auto&& self, int parent, int v) -> int {
        std::vector<int> items;
        for (int c : kids[v]) items.push_back(self(self, v, c));
        int lf = bd.num_nodes++;
        bd.leaf_map.emplace_back(lf, std::make_pair(std::min(parent, v), std::max(parent, v)));
        items.push_back(lf);
        int cur = items[0];
        for (size_t i = 1; i < items.size(); ++i) {
            int j = bd.num_nodes++;
            bd.tree_edges.emplace_back(j, cur);
            bd.tree_edges.emplace_back(j, items[i]);
            cur = j;
        }
        return cur;
    };

    for (int r = 0; r < n; ++r) {
        if (!alive[r] || kids[r].empty()) continue;
        for (int c : kids[r]) {
            // Subdividing an edge whose middle set holds the anchor keeps
            // every middle set unchanged apart from gaining {r} cuts.
            int at = -1;
            std::vector<std::vector<int>> mids = middle_sets(g, bd);
            for (size_t i = 0; i < mids.size() && at < 0; ++i)
                if (std::binary_search(mids[i].begin(), mids[i].end(), r)) at = static_cast<int>(i);
            if (at < 0) throw std::logic_error("extend_for_degree_one: no edge carries the anchor");
            int port = build_port(build_port, r, c);
            int sn = bd.num_nodes++;
            auto [a, b] = bd.tree_edges[at];
            bd.tree_edges[at] = {a, sn};
            bd.tree_edges.emplace_back(sn, b);
            bd.tree_edges.emplace_back(sn, port);
        }
    }

    ValidationReport vrep = validate_branch_decomposition(g, bd);
    if (!vrep.ok)
        throw std::logic_error("extend_for_degree_one: result invalid: " + vrep.errors.front());
    assert(branch_width(g, bd) <= std::max(core_k, 2));
    return bd;
}

namespace {

bool is_star_forest(const Graph& g) {
    for (const std::vector<int>& comp : connected_components(g)) {
        if (comp.size() <= 2) continue;
        long edges = 0;
        int centers = 0;
        for (int v : comp) {
            edges += g.degree(v);
            if (g.degree(v) > 1) ++centers;
        }
        if (centers > 1 || edges / 2 != static_cast<long>(comp.size()) - 1) return false;
    }
    return true;
}

// Width-0 sequence for a disjoint union of stars: leaves of one star are
// twins, and the final leaf blob forms a twin pair with its center.
ContractionSequence star_sequence(const Graph& g) {
    ContractionSequence seq;
    seq.n = g.num_vertices();
    int fresh = seq.n;
    std::vector<int> reps;
    for (const std::vector<int>& comp : connected_components(g)) {
        int center = comp[0];
        for (int v : comp)
            if (g.degree(v) > g.degree(center)) center = v;
        int acc = -1;
        for (int v : comp) {
            if (v == center) continue;
            if (acc < 0) {
                acc = v;
                continue;
            }
            seq.steps.push_back({std::min(acc, v), std::max(acc, v), fresh});
            acc = fresh++;
        }
        if (acc < 0) {
            reps.push_back(center);
            continue;
        }
        seq.steps.push_back({std::min(acc, center), std::max(acc, center), fresh});
        reps.push_back(fresh++);
    }
    for (size_t i = 1; i < reps.size(); ++i) {
        seq.steps.push_back({std::min(reps[i - 1], reps[i]), std::max(reps[i - 1], reps[i]), fresh});
        reps[i] = fresh++;
    }
    return seq;
}

}  // namespace

ContractionSequence bw_contraction_sequence(const Graph& g, const BranchDecomposition& bd) {
    int n = g.num_vertices();
    if (is_star_forest(g)) {
        ContractionSequence seq = star_sequence(g);
        ReplayResult rr = replay(g, seq);
        if (!rr.ok || rr.width != 0) throw std::logic_error("star sequence failed replay");
        seq.claimed_width = 0;
        return seq;
    }
    ValidationReport rep = validate_branch_decomposition(g, bd);
    if (!rep.ok)
        throw std::invalid_argument("bw_contraction_sequence: invalid decomposition: " + rep.errors.front());
    int k = branch_width(g, bd);
    assert(k >= 2);  // a connected non-star component forces width >= 2

    // Root the tree by subdividing its first edge and hanging a root off the
    // new node; the cut below the root holds every leaf, so its middle set
    // is empty and the final merge collapses everything.
    int base = bd.num_nodes;
    int snode = base, rnode = base + 1;
    int total = base + 2;
    std::vector<std::pair<int, int>> tedges = bd.tree_edges;
    int ea = tedges.front().first, eb = tedges.front().second;
    tedges.front() = {ea, snode};
    tedges.emplace_back(snode, eb);
    tedges.emplace_back(snode, rnode);

    std::vector<std::vector<int>> tadj(total);
    for (auto [a, b] : tedges) {
        tadj[a].push_back(b);
        tadj[b].push_back(a);
    }
    std::vector<int> par(total, -2), order;
    par[rnode] = -1;
    order.push_back(rnode);
    for (size_t qi = 0; qi < order.size(); ++qi)
        for (int y : tadj[order[qi]])
            if (par[y] == -2) {
                par[y] = order[qi];
                order.push_back(y);
            }
    assert(static_cast<int>(order.size()) == total);
    std::vector<std::vector<int>> children(total);
    for (int x : order)
        if (par[x] >= 0) children[par[x]].push_back(x);
    for (std::vector<int>& c : children) std::sort(c.begin(), c.end());

    std::vector<std::vector<int>> leaves_of(n);
    std::vector<std::pair<int, int>> carried(total, {-1, -1});
    for (const auto& [leaf, e] : bd.leaf_map) {
        leaves_of[e.first].push_back(leaf);
        leaves_of[e.second].push_back(leaf);
        carried[leaf] = e;
    }

    // mid[x] = middle set of the edge from x up to its parent: the vertices
    // with leaf edges both below and above x.
    std::vector<std::vector<int>> mid(total);
    {
        std::vector<int> cnt(total, 0);
        for (int v = 0; v < n; ++v) {
            int tot = static_cast<int>(leaves_of[v].size());
            if (tot == 0) continue;
            for (int leaf : leaves_of[v]) ++cnt[leaf];
            for (auto it = order.rbegin(); it != order.rend(); ++it) {
                int x = *it;
                if (cnt[x] == 0) continue;
                if (par[x] < 0) {
                    cnt[x] = 0;
                    continue;
                }
                if (cnt[x] < tot) mid[x].push_back(v);
                cnt[par[x]] += cnt[x];
                cnt[x] = 0;
            }
        }
    }

    Trigraph t(g);
    ContractionSequence seq;
    seq.n = n;
    int width_seen = 0;
    auto do_contract = [&](int u, int v) {
        int lo = std::min(u, v), hi = std::max(u, v);
        int w = t.contract(lo, hi);
        seq.steps.push_back({lo, hi, w});
        width_seen = std::max(width_seen, t.max_red_degree());
        return w;
    };
    // Contracts every group of members sharing a neighbourhood trace on eval
    // down to one vertex; returns the surviving vertices sorted.
    auto merge_classes = [&](const std::vector<int>& members, const std::vector<int>& eval) {
        std::vector<int> out;
        for (const NeighborhoodClass& cls : neighborhood_classes(t, members, eval)) {
            int acc = cls.members.front();
            for (size_t i = 1; i < cls.members.size(); ++i) acc = do_contract(acc, cls.members[i]);
            out.push_back(acc);
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    // blocks[x]: one alive vertex per contracted block of the vertices whose
    // edges all lie below x.
    std::vector<std::vector<int>> blocks(total);
    for (int x = 0; x < base; ++x) {
        if (carried[x].first < 0) continue;
        for (int v : {carried[x].first, carried[x].second})
            if (g.degree(v) == 1) blocks[x].push_back(v);
        std::sort(blocks[x].begin(), blocks[x].end());
    }

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int x = *it;
        if (x == rnode || children[x].empty()) continue;
        assert(children[x].size() == 2);
        int c1 = children[x][0], c2 = children[x][1];
        // Vertices whose last appearance on a cut is below x: they join the
        // blocks here and may absorb red edges from the refinements.
        std::vector<int> common, newly_inner;
        std::set_intersection(mid[c1].begin(), mid[c1].end(), mid[c2].begin(), mid[c2].end(),
                              std::back_inserter(common));
        std::set_difference(common.begin(), common.end(), mid[x].begin(), mid[x].end(),
                            std::back_inserter(newly_inner));
        std::vector<int> eval1, eval2;
        std::set_difference(mid[c1].begin(), mid[c1].end(), newly_inner.begin(), newly_inner.end(),
                            std::back_inserter(eval1));
        std::set_difference(mid[c2].begin(), mid[c2].end(), newly_inner.begin(), newly_inner.end(),
                            std::back_inserter(eval2));
        std::vector<int> a1 = merge_classes(blocks[c1], eval1);
        std::vector<int> a2 = merge_classes(blocks[c2], eval2);
        long cnt1 = static_cast<long>(a1.size()), cnt2 = static_cast<long>(a2.size());
        long ci = static_cast<long>(newly_inner.size());
        if (cnt1 + cnt2 > 4L * k)
            throw std::logic_error("bw_contraction_sequence: refined blocks exceed 4k at a node");
        if (2 * (cnt1 + cnt2 + ci - 2) > 9L * k - 6)
            throw std::logic_error("bw_contraction_sequence: merge pool exceeds the 9k/2 budget");
        std::vector<int> pool = std::move(newly_inner);
        pool.insert(pool.end(), a1.begin(), a1.end());
        pool.insert(pool.end(), a2.begin(), a2.end());
        std::sort(pool.begin(), pool.end());
        blocks[x] = merge_classes(pool, mid[x]);
        blocks[c1].clear();
        blocks[c2].clear();
    }

    // Only isolated vertices (and the single final block) can remain.
    std::vector<int> alive = t.alive_vertices();
    for (size_t i = 1; i < alive.size(); ++i) alive[i] = do_contract(alive[i - 1], alive[i]);
    assert(t.num_alive() == 1);
    assert(static_cast<int>(seq.steps.size()) == n - 1);
    seq.claimed_width = width_seen;
    return seq;
}

BwSeqResult bw_sequence(const Graph& g, const BranchDecomposition* bd) {
    BwSeqResult res;
    res.seq.n = g.num_vertices();
    if (g.num_vertices() == 0) {
        res.seq.claimed_width = 0;
        return res;
    }
    if (bd != nullptr) {
        res.seq = bw_contraction_sequence(g, *bd);
        res.k = branch_width(g, *bd);
        return res;
    }

    int host_fresh = g.num_vertices();
    std::vector<int> reps;
    for (const std::vector<int>& comp : connected_components(g)) {
        Graph sub = induced_subgraph(g, comp);
        ContractionSequence cseq;
        if (is_star_forest(sub)) {
            cseq = bw_contraction_sequence(sub, BranchDecomposition{});
        } else {
            BranchDecomposition sub_bd;
            if (sub.num_edges() == static_cast<int>(comp.size()) - 1) {
                sub_bd = tree_branch_decomposition(sub);
            } else {
                // Strip to the 2-core, decompose it, and pull the pendant
                // trees back in without widening the decomposition.
                std::vector<int> sdeg(sub.num_vertices());
                std::vector<char> salive(sub.num_vertices(), 1);
                std::vector<int> stack;
                for (int v = 0; v < sub.num_vertices(); ++v) {
                    sdeg[v] = sub.degree(v);
                    if (sdeg[v] <= 1) stack.push_back(v);
                }
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    if (!salive[v] || sdeg[v] > 1) continue;
                    salive[v] = 0;
                    for (int u : sub.neighbors(v))
                        if (salive[u] && --sdeg[u] == 1) stack.push_back(u);
                }
                std::vector<int> core_vs;
                for (int v = 0; v < sub.num_vertices(); ++v)
                    if (salive[v]) core_vs.push_back(v);
                Graph core = induced_subgraph(sub, core_vs);
                BranchDecomposition core_bd = heuristic_branch_decomposition(core);
                for (auto& [leaf, e] : core_bd.leaf_map) {
                    int u = core_vs[e.first], v = core_vs[e.second];
                    e = {std::min(u, v), std::max(u, v)};
                }
                sub_bd = core_vs.size() == comp.size() ? std::move(core_bd)
                                                       : extend_for_degree_one(sub, core_bd);
            }
            cseq = bw_contraction_sequence(sub, sub_bd);
            res.k = std::max(res.k, branch_width(sub, sub_bd));
        }
        int fresh_base = host_fresh;
        std::vector<ContractionStep> steps =
            relabel_steps(cseq.steps, static_cast<int>(comp.size()), comp, host_fresh);
        res.seq.steps.insert(res.seq.steps.end(), steps.begin(), steps.end());
        reps.push_back(comp.size() == 1 ? comp[0] : fresh_base + static_cast<int>(comp.size()) - 2);
    }
    for (size_t i = 1; i < reps.size(); ++i) {
        int a = std::min(reps[i - 1], reps[i]), b = std::max(reps[i - 1], reps[i]);
        res.seq.steps.push_back(ContractionStep{a, b, host_fresh});
        reps[i] = host_fresh++;
    }
    ReplayResult rr = replay(g, res.seq);
    if (!rr.ok || rr.final_vertices != 1)
        throw std::logic_error("bw_sequence: stitched sequence fails replay: " + rr.error);
    res.seq.claimed_width = rr.width;
    return res;
}

}  // namespace tww
