#include "tww/embedding.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <random>
#include <stdexcept>

namespace tww {

namespace {

int rotation_index(const std::vector<int>& rot, int u) {
    for (int i = 0; i < static_cast<int>(rot.size()); ++i)
        if (rot[i] == u) return i;
    throw std::invalid_argument("vertex missing from rotation list");
}

void check_rotation_matches(const Graph& g, const RotationSystem& rs) {
    if (static_cast<int>(rs.rotation.size()) != g.num_vertices())
        throw std::invalid_argument("rotation system has wrong vertex count");
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<int> a = rs.rotation[v];
        std::vector<int> b = g.neighbors(v);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw std::invalid_argument("rotation list disagrees with adjacency");
        for (size_t i = 0; i + 1 < a.size(); ++i)
            if (a[i] == a[i + 1]) throw std::invalid_argument("rotation list repeats a neighbor");
    }
}

// Rotates a closed walk so it starts at its lexicographically smallest
// directed edge. Each directed edge occurs on exactly one face, once, so the
// minimum is unique.
void canonicalize_walk(std::vector<int>& walk) {
    int l = static_cast<int>(walk.size());
    int best = 0;
    for (int i = 1; i < l; ++i) {
        int a = walk[i], b = walk[(i + 1) % l];
        int ba = walk[best], bb = walk[(best + 1) % l];
        if (a < ba || (a == ba && b < bb)) best = i;
    }
    std::rotate(walk.begin(), walk.begin() + best, walk.end());
}

}  // namespace

std::vector<FaceWalk> faces(const Graph& g, const RotationSystem& rs) {
    check_rotation_matches(g, rs);
    int n = g.num_vertices();
    std::vector<std::vector<char>> seen(n);
    for (int v = 0; v < n; ++v) seen[v].assign(rs.rotation[v].size(), 0);

    std::vector<FaceWalk> out;
    for (int u = 0; u < n; ++u) {
        for (int idx = 0; idx < static_cast<int>(rs.rotation[u].size()); ++idx) {
            if (seen[u][idx]) continue;
            std::vector<int> walk;
            int cu = u, cidx = idx;
            do {
                seen[cu][cidx] = 1;
                walk.push_back(cu);
                int cv = rs.rotation[cu][cidx];
                int j = rotation_index(rs.rotation[cv], cu);
                j = (j + 1) % static_cast<int>(rs.rotation[cv].size());
                cu = cv;
                cidx = j;
            } while (!(cu == u && cidx == idx));
            canonicalize_walk(walk);
            out.push_back(FaceWalk{std::move(walk)});
        }
    }
    std::sort(out.begin(), out.end(), [](const FaceWalk& a, const FaceWalk& b) {
        return std::make_pair(a.walk[0], a.walk[1 % a.walk.size()]) <
               std::make_pair(b.walk[0], b.walk[1 % b.walk.size()]);
    });
    return out;
}

ValidationReport validate_embedding(const Graph& g, const RotationSystem& rs) {
    ValidationReport rep;
    if (static_cast<int>(rs.rotation.size()) != g.num_vertices())
        return rep.fail("rotation system has wrong vertex count");
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<int> a = rs.rotation[v];
        std::vector<int> b = g.neighbors(v);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return rep.fail("rotation list of vertex " + std::to_string(v) + " disagrees with adjacency");
    }
    std::vector<FaceWalk> fs = faces(g, rs);
    int f = static_cast<int>(fs.size());
    int comps = static_cast<int>(connected_components(g).size());
    int isolated = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 0) ++isolated;
    // Each component traces its own outer walk; an isolated vertex traces
    // no walk at all, so it contributes 1 instead of 2.
    if (g.num_vertices() - g.num_edges() + f != 2 * comps - isolated)
        return rep.fail("Euler relation fails: n=" + std::to_string(g.num_vertices()) +
                        " m=" + std::to_string(g.num_edges()) + " f=" + std::to_string(f) +
                        " components=" + std::to_string(comps));
    // An edgeless plane graph traces no walks yet still has its one unbounded
    // face; index 0 names it by convention.
    if (f == 0 ? rs.outer_face != 0 : (rs.outer_face < 0 || rs.outer_face >= f))
        return rep.fail("outer_face out of range");
    return rep;
}

std::pair<std::vector<int>, std::vector<int>> insert_chord(Graph& g, RotationSystem& rs,
                                                           const std::vector<int>& walk, int p, int q) {
    int l = static_cast<int>(walk.size());
    assert(0 <= p && p < q && q < l);
    assert(q - p >= 2 && !(p == 0 && q == l - 1));
    int a = walk[p], b = walk[q];
    assert(a != b);
    assert(!g.has_edge(a, b));
    g.add_edge(a, b);

    int pred_a = walk[(p + l - 1) % l];
    int pred_b = walk[(q + l - 1) % l];
    std::vector<int>& ra = rs.rotation[a];
    ra.insert(ra.begin() + rotation_index(ra, pred_a) + 1, b);
    std::vector<int>& rb = rs.rotation[b];
    rb.insert(rb.begin() + rotation_index(rb, pred_b) + 1, a);

    std::vector<int> f1(walk.begin() + p, walk.begin() + q + 1);
    std::vector<int> f2(walk.begin() + q, walk.end());
    f2.insert(f2.end(), walk.begin(), walk.begin() + p + 1);
    return {std::move(f1), std::move(f2)};
}

int insert_vertex_in_face(Graph& g, RotationSystem& rs, const std::vector<int>& walk,
                          const std::vector<int>& attach) {
    int l = static_cast<int>(walk.size());
    assert(!attach.empty());
    for (size_t i = 0; i + 1 < attach.size(); ++i) assert(attach[i] < attach[i + 1]);
    assert(attach.front() >= 0 && attach.back() < l);
    for (size_t i = 0; i < attach.size(); ++i)
        for (size_t j = i + 1; j < attach.size(); ++j) assert(walk[attach[i]] != walk[attach[j]]);

    int v = g.num_vertices();
    g.add_vertex();
    rs.rotation.emplace_back();
    for (auto it = attach.rbegin(); it != attach.rend(); ++it) rs.rotation[v].push_back(walk[*it]);
    for (int p : attach) {
        int x = walk[p];
        g.add_edge(v, x);
        int pred = walk[(p + l - 1) % l];
        std::vector<int>& rx = rs.rotation[x];
        rx.insert(rx.begin() + rotation_index(rx, pred) + 1, v);
    }
    return v;
}

namespace {

// All chords of `walk` from position p to non-adjacent positions, in walk
// order starting just past p. A fan is legal when every chord is insertable
// and the chord targets are pairwise distinct vertices.
bool fan_is_legal(const Graph& g, const std::vector<int>& walk, int p) {
    int l = static_cast<int>(walk.size());
    std::vector<int> targets;
    for (int off = 2; off <= l - 2; ++off) {
        int t = walk[(p + off) % l];
        if (t == walk[p] || g.has_edge(walk[p], t)) return false;
        targets.push_back(t);
    }
    std::sort(targets.begin(), targets.end());
    return std::adjacent_find(targets.begin(), targets.end()) == targets.end();
}

}  // namespace

Triangulation triangulate(const Graph& g, const RotationSystem& rs) {
    if (g.num_vertices() < 3) throw std::invalid_argument("triangulate needs n >= 3");
    if (!is_connected(g)) throw std::invalid_argument("triangulate needs a connected graph");
    {
        ValidationReport rep = validate_embedding(g, rs);
        if (!rep.ok) throw std::invalid_argument("triangulate: invalid embedding: " + rep.errors.front());
    }

    Triangulation tr;
    tr.graph = g;
    tr.embedding = rs;

    std::vector<FaceWalk> fs = faces(g, rs);
    std::pair<int, int> outer_edge{fs[rs.outer_face].walk[0],
                                   fs[rs.outer_face].walk[1 % fs[rs.outer_face].walk.size()]};

    std::vector<std::vector<int>> work;
    for (const FaceWalk& f : fs) work.push_back(f.walk);

    while (!work.empty()) {
        std::vector<int> walk = std::move(work.back());
        work.pop_back();
        int l = static_cast<int>(walk.size());
        if (l == 3) continue;
        assert(l >= 4);

        // Prefer a fan: all chords from one walk position. Candidate
        // positions are tried by (vertex id, position).
        std::vector<std::pair<int, int>> order;
        for (int p = 0; p < l; ++p) order.emplace_back(walk[p], p);
        std::sort(order.begin(), order.end());
        int fan_pos = -1;
        for (auto [vtx, p] : order) {
            (void)vtx;
            if (fan_is_legal(tr.graph, walk, p)) {
                fan_pos = p;
                break;
            }
        }
        if (fan_pos >= 0) {
            // The fan legality check guarantees the apex vertex occurs only
            // at fan_pos, so it stays unique in every piece we keep.
            int apex = walk[fan_pos];
            std::vector<int> cur = std::move(walk);
            while (cur.size() > 3) {
                int cl = static_cast<int>(cur.size());
                int p = rotation_index(cur, apex);
                int q = (p + 2) % cl;
                auto [f1, f2] = insert_chord(tr.graph, tr.embedding, cur, std::min(p, q), std::max(p, q));
                // One piece is the triangle just cut off; keep fanning the other.
                cur = f1.size() != 3 ? std::move(f1) : std::move(f2);
            }
            continue;
        }

        // No fan: insert the lexicographically smallest legal chord (by
        // vertex pair, then positions) and requeue both pieces.
        int bp = -1, bq = -1, ba = -1, bb = -1;
        for (int p = 0; p < l; ++p) {
            for (int q = p + 2; q < l; ++q) {
                if (p == 0 && q == l - 1) continue;
                int x = walk[p], y = walk[q];
                if (x == y || tr.graph.has_edge(x, y)) continue;
                int lo = std::min(x, y), hi = std::max(x, y);
                if (bp < 0 || std::make_tuple(lo, hi, p, q) < std::make_tuple(ba, bb, bp, bq)) {
                    bp = p;
                    bq = q;
                    ba = lo;
                    bb = hi;
                }
            }
        }
        if (bp < 0) throw std::logic_error("triangulate: face admits no chord");
        auto [f1, f2] = insert_chord(tr.graph, tr.embedding, walk, bp, bq);
        work.push_back(std::move(f1));
        work.push_back(std::move(f2));
    }

    std::vector<FaceWalk> out_faces = faces(tr.graph, tr.embedding);
    tr.embedding.outer_face = -1;
    for (int i = 0; i < static_cast<int>(out_faces.size()); ++i) {
        const std::vector<int>& w = out_faces[i].walk;
        if (w.size() != 3) throw std::logic_error("triangulate: non-triangular face survived");
        for (int j = 0; j < 3; ++j)
            if (w[j] == outer_edge.first && w[(j + 1) % 3] == outer_edge.second)
                tr.embedding.outer_face = i;
    }
    if (tr.embedding.outer_face < 0) throw std::logic_error("triangulate: lost the outer face");
    return tr;
}

Triangulation random_planar_triangulation(int n, uint64_t seed) {
    if (n < 3) throw std::invalid_argument("random_planar_triangulation needs n >= 3");
    Triangulation tr;
    tr.graph = Graph(3);
    tr.graph.add_edge(0, 1);
    tr.graph.add_edge(0, 2);
    tr.graph.add_edge(1, 2);
    tr.embedding.rotation = {{1, 2}, {2, 0}, {0, 1}};

    std::mt19937_64 rng(seed);
    std::vector<std::array<int, 3>> internal{{0, 1, 2}};
    for (int v = 3; v < n; ++v) {
        size_t pick = std::uniform_int_distribution<size_t>(0, internal.size() - 1)(rng);
        std::array<int, 3> f = internal[pick];
        std::vector<int> walk{f[0], f[1], f[2]};
        int w = insert_vertex_in_face(tr.graph, tr.embedding, walk, {0, 1, 2});
        assert(w == v);
        internal[pick] = {w, f[0], f[1]};
        internal.push_back({w, f[1], f[2]});
        internal.push_back({w, f[2], f[0]});
    }

    // Locate the outer face (1 -> 0 is one of its directed edges).
    std::vector<FaceWalk> fs = faces(tr.graph, tr.embedding);
    tr.embedding.outer_face = -1;
    for (int i = 0; i < static_cast<int>(fs.size()); ++i) {
        const std::vector<int>& wk = fs[i].walk;
        for (size_t j = 0; j < wk.size(); ++j)
            if (wk[j] == 1 && wk[(j + 1) % wk.size()] == 0) tr.embedding.outer_face = i;
    }
    assert(tr.embedding.outer_face >= 0);
    return tr;
}

BfsLayering bfs_layering(const Graph& g, const RotationSystem& rs, int root) {
    check_rotation_matches(g, rs);
    int n = g.num_vertices();
    BfsLayering bl;
    bl.root = root;
    bl.layer.assign(n, -1);
    bl.parent.assign(n, -1);
    bl.layer[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : rs.rotation[u]) {
            if (bl.layer[v] >= 0) continue;
            bl.layer[v] = bl.layer[u] + 1;
            bl.parent[v] = u;
            q.push(v);
        }
    }
    return bl;
}

int default_root(const Graph& g, const RotationSystem& rs) {
    std::vector<FaceWalk> fs = faces(g, rs);
    const std::vector<int>& w = fs.at(rs.outer_face).walk;
    return *std::min_element(w.begin(), w.end());
}

}  // namespace tww
