#include "tww/planar_seq.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "tww/tree_decomposition.hpp"

namespace tww {

namespace {

// Largest number of distinct neighbourhood traces across a k-vertex noose.
int class_limit(int k) {
    assert(k >= 1);
    return 4 * k - 4;
}

using LayerBlocks = std::map<int, std::vector<int>>;

struct ComponentEngine {
    const Graph* g = nullptr;    // component graph; the trigraph contracts this
    const Graph* gp = nullptr;   // its triangulation (same vertex ids)
    const std::vector<FaceWalk>* fs = nullptr;
    const BfsLayering* lay = nullptr;
    std::unordered_map<long long, int> face_of;  // directed edge -> face index
    Trigraph t;
    std::vector<ContractionStep> steps;
    int max_paths = 0;

    explicit ComponentEngine(const Graph& base) : t(base) {}

    long long dkey(int a, int b) const {
        return static_cast<long long>(a) * gp->num_vertices() + b;
    }

    int do_contract(int u, int v) {
        int a = std::min(u, v), b = std::max(u, v);
        int w = t.contract(a, b);
        steps.push_back({a, b, w});
        return w;
    }

    // Contracts every neighbourhood class of `members` (traces taken over
    // `eval`) down to one vertex, folding onto the smallest member first.
    std::vector<int> merge_classes(const std::vector<int>& members, const std::vector<int>& eval) {
        if (members.size() <= 1) return members;
        auto classes = neighborhood_classes(t, members, eval);
        std::vector<int> out;
        out.reserve(classes.size());
        for (const auto& cl : classes) {
            int acc = cl.members[0];
            for (size_t i = 1; i < cl.members.size(); ++i) acc = do_contract(acc, cl.members[i]);
            out.push_back(acc);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    LayerBlocks process_region(const std::vector<std::vector<int>>& paths,
                               const std::vector<int>& face_ids, PlanarTraceNode& tn);
};

LayerBlocks ComponentEngine::process_region(const std::vector<std::vector<int>>& paths,
                                            const std::vector<int>& face_ids,
                                            PlanarTraceNode& tn) {
    const int nn = gp->num_vertices();
    const int k = static_cast<int>(paths.size());
    assert(k >= 1);
    max_paths = std::max(max_paths, k);
    tn.num_paths = k;

    std::vector<char> on_b(nn, 0);
    for (const auto& p : paths)
        for (int v : p) on_b[v] = 1;

    // Interior: vertices of the enclosed faces that are not on the boundary.
    std::vector<char> in_x(nn, 0);
    std::vector<int> xs;
    for (int fi : face_ids)
        for (int v : (*fs)[fi].walk)
            if (!on_b[v] && !in_x[v]) {
                in_x[v] = 1;
                xs.push_back(v);
            }
    std::sort(xs.begin(), xs.end());
    tn.interior_size = static_cast<int>(xs.size());
    if (xs.empty()) return {};

    // Split the boundary into three contiguous groups; a vertex is coloured by
    // the group of the first boundary vertex on its tree path to the root.
    std::vector<int> group(nn, 0);
    if (k == 1) {
        const auto& p = paths[0];
        assert(p.size() >= 3);
        group[p.front()] = 1;
        for (size_t i = 1; i + 1 < p.size(); ++i) group[p[i]] = 2;
        group[p.back()] = 3;
    } else if (k == 2) {
        int a = paths[0].size() >= 2 ? 0 : 1;
        assert(paths[a].size() >= 2);
        group[paths[a].front()] = 1;
        for (size_t i = 1; i < paths[a].size(); ++i) group[paths[a][i]] = 2;
        for (int v : paths[1 - a]) group[v] = 3;
    } else {
        int g2 = (k - 1) / 2;  // paths 1..g2 form the middle group
        for (int pi = 0; pi < k; ++pi) {
            int gr = pi == 0 ? 1 : (pi <= g2 ? 2 : 3);
            for (int v : paths[pi]) group[v] = gr;
        }
    }

    // exit_of[v]: first boundary vertex on the tree path from v to the root,
    // memoised with path compression so a region costs O(|X|) overall.
    std::vector<int> exit_of(nn, -1);
    auto find_exit = [&](int v) {
        std::vector<int> seen;
        int x = v;
        while (!on_b[x] && exit_of[x] < 0) {
            seen.push_back(x);
            x = lay->parent[x];
            if (x < 0) throw std::logic_error("planar region: tree walk escaped past the root");
        }
        int e = on_b[x] ? x : exit_of[x];
        for (int c : seen) exit_of[c] = e;
        return e;
    };
    auto group_of = [&](int v) { return on_b[v] ? group[v] : group[find_exit(v)]; };

    // Sperner face: first enclosed face carrying all three groups.
    int sp = -1;
    std::array<int, 3> vc{-1, -1, -1};
    for (int fi : face_ids) {
        const auto& w = (*fs)[fi].walk;
        assert(w.size() == 3);
        int g0 = group_of(w[0]), g1 = group_of(w[1]), g2 = group_of(w[2]);
        if (g0 != g1 && g1 != g2 && g0 != g2) {
            sp = fi;
            vc[g0 - 1] = w[0];
            vc[g1 - 1] = w[1];
            vc[g2 - 1] = w[2];
            break;
        }
    }
    if (sp < 0) throw std::logic_error("planar region: no tri-coloured face found");
    tn.sperner_face = vc;

    // The face walks all wind the same way, so the chosen face must visit the
    // groups in cyclic order 1,2,3; the subregion construction relies on it.
    {
        const auto& w = (*fs)[sp].walk;
        int i1 = w[0] == vc[0] ? 0 : (w[1] == vc[0] ? 1 : 2);
        if (w[(i1 + 1) % 3] != vc[1] || w[(i1 + 2) % 3] != vc[2])
            throw std::logic_error("planar region: Sperner face winds against the boundary");
    }

    // Paths from the Sperner corners down to the boundary, boundary excluded.
    std::array<std::vector<int>, 3> qchain;
    std::array<int, 3> ex{};
    for (int i = 0; i < 3; ++i) {
        int x = vc[i];
        while (!on_b[x]) {
            if (!in_x[x]) throw std::logic_error("planar region: vertical path leaves the region");
            qchain[i].push_back(x);
            x = lay->parent[x];
        }
        ex[i] = x;
        assert(group[ex[i]] == i + 1);
    }

    // Boundary cycle positions for walking arcs between the exit vertices.
    std::vector<int> cyc, path_idx;
    for (int pi = 0; pi < k; ++pi)
        for (int v : paths[pi]) {
            cyc.push_back(v);
            path_idx.push_back(pi);
        }
    const int L = static_cast<int>(cyc.size());
    std::vector<int> pos(nn, -1);
    for (int i = 0; i < L; ++i) pos[cyc[i]] = i;

    auto arc_pieces = [&](int from, int to) {
        std::vector<std::vector<int>> pieces;
        int i = pos[from];
        pieces.push_back({cyc[i]});
        while (cyc[i] != to) {
            int ni = (i + 1) % L;
            if (path_idx[ni] == path_idx[i]) pieces.back().push_back(cyc[ni]);
            else pieces.push_back({cyc[ni]});
            i = ni;
        }
        return pieces;
    };

    // Subregion a is bounded by the chain from corner a, the boundary arc from
    // exit a forward to exit a+1, the chain from corner a+1 reversed, and the
    // closing Sperner edge.
    std::array<std::vector<std::vector<int>>, 3> child_paths;
    for (int a = 0; a < 3; ++a) {
        int b = (a + 1) % 3;
        std::vector<std::vector<int>> ps;
        if (!qchain[a].empty()) ps.push_back(qchain[a]);
        for (auto& pc : arc_pieces(ex[a], ex[b])) ps.push_back(std::move(pc));
        if (!qchain[b].empty()) ps.emplace_back(qchain[b].rbegin(), qchain[b].rend());
        child_paths[a] = std::move(ps);
    }

    // Each subregion cycle is oriented with its interior on the side of its
    // own directed edges, so a face is assigned to the cycle whose directed
    // edge it carries in its walk.
    std::unordered_map<long long, int> owner;
    std::unordered_set<long long> blocked;
    for (int a = 0; a < 3; ++a) {
        std::vector<int> walkv;
        for (const auto& p : child_paths[a]) walkv.insert(walkv.end(), p.begin(), p.end());
        const int m = static_cast<int>(walkv.size());
        for (int i = 0; i < m; ++i) {
            int u = walkv[i], v = walkv[(i + 1) % m];
            owner[dkey(u, v)] = a;
            blocked.insert(dkey(std::min(u, v), std::max(u, v)));
        }
    }

    std::vector<char> in_region(fs->size(), 0);
    for (int fi : face_ids) in_region[fi] = 1;
    std::array<std::vector<int>, 3> child_faces;
    std::vector<char> visited(fs->size(), 0);
    visited[sp] = 1;
    for (int fi : face_ids) {
        if (visited[fi]) continue;
        std::vector<int> compf{fi};
        visited[fi] = 1;
        int own = -1;
        for (size_t qi = 0; qi < compf.size(); ++qi) {
            const auto& w = (*fs)[compf[qi]].walk;
            const int m = static_cast<int>(w.size());
            for (int i = 0; i < m; ++i) {
                int u = w[i], v = w[(i + 1) % m];
                if (blocked.count(dkey(std::min(u, v), std::max(u, v)))) {
                    auto it = owner.find(dkey(u, v));
                    if (it != owner.end()) {
                        if (own >= 0 && own != it->second)
                            throw std::logic_error("planar region: face claimed by two subregions");
                        own = it->second;
                    }
                    continue;
                }
                int nf = face_of.at(dkey(v, u));
                if (!in_region[nf]) throw std::logic_error("planar region: flood crossed the boundary");
                if (!visited[nf]) {
                    visited[nf] = 1;
                    compf.push_back(nf);
                }
            }
        }
        if (own < 0) throw std::logic_error("planar region: enclosed faces touch no subregion cycle");
        child_faces[own].insert(child_faces[own].end(), compf.begin(), compf.end());
    }

    // The subregion interiors and the three corner chains partition X.
    {
        std::vector<char> seen(nn, 0);
        size_t covered = 0;
        auto mark = [&](int v) {
            if (!in_x[v]) throw std::logic_error("planar region: partition leaks outside the interior");
            if (seen[v]) throw std::logic_error("planar region: interior vertex claimed twice");
            seen[v] = 1;
            ++covered;
        };
        for (const auto& qc : qchain)
            for (int v : qc) mark(v);
        for (int a = 0; a < 3; ++a) {
            std::vector<char> on_cb(nn, 0);
            for (const auto& p : child_paths[a])
                for (int v : p) on_cb[v] = 1;
            std::vector<char> counted(nn, 0);
            for (int fi : child_faces[a])
                for (int v : (*fs)[fi].walk)
                    if (!on_cb[v] && !counted[v]) {
                        counted[v] = 1;
                        mark(v);
                    }
        }
        if (covered != xs.size()) throw std::logic_error("planar region: interior not fully covered");
    }

    std::array<LayerBlocks, 3> child_blocks;
    for (int a = 0; a < 3; ++a) {
        if (child_faces[a].empty()) continue;
        std::sort(child_faces[a].begin(), child_faces[a].end());
        tn.children.emplace_back();
        child_blocks[a] = process_region(child_paths[a], child_faces[a], tn.children.back());
    }

    // Boundary vertices by BFS layer; traces are evaluated against the three
    // layers a block can see.
    std::map<int, std::vector<int>> p_layer;
    for (const auto& p : paths)
        for (int v : p) p_layer[lay->layer[v]].push_back(v);
    for (auto& [j, vsl] : p_layer) std::sort(vsl.begin(), vsl.end());
    auto eval_for = [&](int j) {
        std::vector<int> ev;
        for (int dj = j - 1; dj <= j + 1; ++dj) {
            auto it = p_layer.find(dj);
            if (it != p_layer.end()) ev.insert(ev.end(), it->second.begin(), it->second.end());
        }
        std::sort(ev.begin(), ev.end());
        return ev;
    };

    // First pass: refine each subregion's layer blocks against the boundary.
    std::array<LayerBlocks, 3> tilde;
    for (int a = 0; a < 3; ++a)
        for (const auto& [j, blk] : child_blocks[a]) {
            tilde[a][j] = merge_classes(blk, eval_for(j));
            if (static_cast<int>(tilde[a][j].size()) > class_limit(9))
                throw std::logic_error("planar region: refined layer block exceeds the 9-vertex noose limit");
        }

    std::map<int, std::vector<int>> q_layer;
    for (const auto& qc : qchain)
        for (int v : qc) q_layer[lay->layer[v]].push_back(v);
    for (auto& [j, vsl] : q_layer) std::sort(vsl.begin(), vsl.end());

    // Second pass: per layer, merge the refined blocks of all three subregions
    // together with the corner-chain vertices of that layer.
    LayerBlocks out;
    std::set<int> layers;
    for (int a = 0; a < 3; ++a)
        for (const auto& [j, blk] : tilde[a]) layers.insert(j);
    for (const auto& [j, vsl] : q_layer) layers.insert(j);
    for (int j : layers) {
        std::vector<int> pool;
        long tsum = 0;
        for (int a = 0; a < 3; ++a) {
            auto it = tilde[a].find(j);
            if (it == tilde[a].end()) continue;
            tsum += static_cast<long>(it->second.size());
            pool.insert(pool.end(), it->second.begin(), it->second.end());
        }
        if (tsum > class_limit(3 * k) + 5)
            throw std::logic_error("planar region: refined blocks exceed the merge slack");
        auto it = q_layer.find(j);
        if (it != q_layer.end()) pool.insert(pool.end(), it->second.begin(), it->second.end());
        std::sort(pool.begin(), pool.end());
        out[j] = merge_classes(pool, eval_for(j));
        if (static_cast<int>(out[j].size()) > class_limit(3 * k))
            throw std::logic_error("planar region: merged layer block exceeds the noose limit");
    }

    // Red edges must stay between blocks of adjacent layers.
    std::unordered_map<int, int> blk_layer;
    for (const auto& [j, blk] : out)
        for (int b : blk) blk_layer[b] = j;
    for (const auto& [j, blk] : out)
        for (int b : blk)
            for (int rn : t.red_neighbors(b)) {
                auto it = blk_layer.find(rn);
                if (it == blk_layer.end() || std::abs(it->second - j) > 1)
                    throw std::logic_error("planar region: red edge leaves the layer band");
            }

    for (const auto& [j, blk] : out) tn.layer_blocks.emplace_back(j, static_cast<int>(blk.size()));
    return out;
}

struct CompOut {
    ContractionSequence seq;
    int max_paths = 0;
    PlanarTraceNode trace;
};

CompOut planar_component(const Graph& sub, const RotationSystem& srs) {
    CompOut out;
    const int n = sub.num_vertices();
    out.seq.n = n;
    out.trace.interior_size = 0;
    if (n == 1) {
        out.seq.claimed_width = 0;
        return out;
    }
    if (n == 2) {
        out.seq.steps.push_back({0, 1, 2});
        out.seq.claimed_width = 0;
        return out;
    }

    Triangulation tri = triangulate(sub, srs);
    ComponentEngine eng(sub);
    std::vector<FaceWalk> all_faces = faces(tri.graph, tri.embedding);
    eng.g = &sub;
    eng.gp = &tri.graph;
    eng.fs = &all_faces;
    int root = default_root(tri.graph, tri.embedding);
    BfsLayering lay = bfs_layering(tri.graph, tri.embedding, root);
    eng.lay = &lay;
    for (size_t fi = 0; fi < all_faces.size(); ++fi) {
        const auto& w = all_faces[fi].walk;
        for (size_t i = 0; i < w.size(); ++i)
            eng.face_of[eng.dkey(w[i], w[(i + 1) % w.size()])] = static_cast<int>(fi);
    }

    // Root region: the outer triangle reversed, so the enclosed faces sit on
    // the cycle's own directed edges.
    const auto& ow = all_faces[tri.embedding.outer_face].walk;
    assert(ow.size() == 3);
    std::vector<std::vector<int>> rpaths = {{ow[2]}, {ow[1]}, {ow[0]}};
    std::vector<int> rfaces;
    for (size_t fi = 0; fi < all_faces.size(); ++fi)
        if (static_cast<int>(fi) != tri.embedding.outer_face) rfaces.push_back(static_cast<int>(fi));

    LayerBlocks blocks = eng.process_region(rpaths, rfaces, out.trace);

    // Final phase: fold the outer triangle's vertices into their BFS layers,
    // collapse each layer to one vertex bottom-up, then contract the path of
    // layer vertices.
    for (int o : ow) blocks[lay.layer[o]].push_back(o);
    std::vector<int> lverts;
    for (auto& [j, blk] : blocks) {
        std::sort(blk.begin(), blk.end());
        int cur = blk[0];
        for (size_t i = 1; i < blk.size(); ++i) cur = eng.do_contract(cur, blk[i]);
        lverts.push_back(cur);
    }
    int acc = -1;
    for (int u : lverts) acc = acc < 0 ? u : eng.do_contract(acc, u);
    assert(eng.t.num_alive() == 1);

    out.seq.steps = std::move(eng.steps);
    out.max_paths = eng.max_paths;
    return out;
}

// Restriction of a rotation system to one connected component. Any face of
// the restricted system may serve as the outer face.
RotationSystem restrict_rotation(const RotationSystem& rs, const std::vector<int>& comp, int host_n) {
    std::vector<int> inv(host_n, -1);
    for (size_t i = 0; i < comp.size(); ++i) inv[comp[i]] = static_cast<int>(i);
    RotationSystem out;
    out.rotation.resize(comp.size());
    for (size_t i = 0; i < comp.size(); ++i)
        for (int u : rs.rotation[comp[i]]) {
            assert(inv[u] >= 0);
            out.rotation[i].push_back(inv[u]);
        }
    out.outer_face = 0;
    return out;
}

}  // namespace

int sperner_face(const std::vector<FaceWalk>& fs, const std::vector<int>& colour, int outer_face) {
    for (size_t fi = 0; fi < fs.size(); ++fi) {
        if (static_cast<int>(fi) == outer_face) continue;
        const auto& w = fs[fi].walk;
        if (w.size() != 3) continue;
        int c0 = colour[w[0]], c1 = colour[w[1]], c2 = colour[w[2]];
        if (c0 < 1 || c1 < 1 || c2 < 1) continue;
        if (c0 != c1 && c1 != c2 && c0 != c2) return static_cast<int>(fi);
    }
    return -1;
}

PlanarSeqResult planar_contraction_sequence(const Graph& g, const RotationSystem& rs) {
    ValidationReport rep = validate_embedding(g, rs);
    if (!rep.ok) throw std::invalid_argument("planar_contraction_sequence: invalid embedding: " + rep.errors.front());

    PlanarSeqResult res;
    const int n = g.num_vertices();
    res.seq.n = n;
    if (n == 0) {
        res.seq.claimed_width = 0;
        return res;
    }

    auto comps = connected_components(g);
    int host_fresh = n;
    std::vector<int> reps;
    for (const auto& comp : comps) {
        Graph sub = induced_subgraph(g, comp);
        RotationSystem sub_rs = restrict_rotation(rs, comp, n);
        CompOut co = planar_component(sub, sub_rs);
        res.max_boundary_paths = std::max(res.max_boundary_paths, co.max_paths);
        res.components.push_back(std::move(co.trace));
        auto steps = relabel_steps(co.seq.steps, static_cast<int>(comp.size()), comp, host_fresh);
        res.seq.steps.insert(res.seq.steps.end(), steps.begin(), steps.end());
        reps.push_back(comp.size() == 1 ? comp[0] : steps.back().w);
    }
    int acc = reps[0];
    for (size_t i = 1; i < reps.size(); ++i) {
        int a = std::min(acc, reps[i]), b = std::max(acc, reps[i]);
        res.seq.steps.push_back({a, b, host_fresh});
        acc = host_fresh++;
    }

    ReplayResult rr = replay(g, res.seq);
    if (!rr.ok) throw std::logic_error("planar_contraction_sequence: produced sequence failed replay: " + rr.error);
    if (n >= 1 && rr.final_vertices != 1)
        throw std::logic_error("planar_contraction_sequence: sequence is not complete");
    res.seq.claimed_width = rr.width;
    return res;
}

}  // namespace tww
