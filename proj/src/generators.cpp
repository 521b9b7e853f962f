#include "tww/generators.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace tww {

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    g.sort_adjacency();
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid_graph: empty grid");
    Graph g(rows * cols);
    auto id = [&](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
        }
    g.sort_adjacency();
    return g;
}

Graph gnp(int n, double p, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    g.sort_adjacency();
    return g;
}

KTree random_ktree(int k, int n, uint64_t seed) {
    if (k < 1 || n < k + 1) throw std::invalid_argument("random_ktree: need n >= k + 1 >= 2");
    std::mt19937_64 rng(seed);
    KTree out;
    out.graph = Graph(n);
    for (int u = 0; u <= k; ++u)
        for (int v = u + 1; v <= k; ++v) out.graph.add_edge(u, v);
    // Seed bag holds the initial clique; each later vertex gets the bag
    // "chosen clique + v" hanging off the bag that spawned the clique.
    out.decomposition.bags.push_back([&] {
        std::vector<int> b(k + 1);
        std::iota(b.begin(), b.end(), 0);
        return b;
    }());
    struct Clique {
        std::vector<int> verts;
        int home_bag;
    };
    std::vector<Clique> cliques;
    {
        std::vector<int> seed_clique(k + 1);
        std::iota(seed_clique.begin(), seed_clique.end(), 0);
        for (int skip = 0; skip <= k; ++skip) {
            Clique c;
            for (int i = 0; i <= k; ++i)
                if (i != skip) c.verts.push_back(seed_clique[i]);
            c.home_bag = 0;
            cliques.push_back(std::move(c));
        }
    }
    for (int v = k + 1; v < n; ++v) {
        std::uniform_int_distribution<size_t> pick(0, cliques.size() - 1);
        const Clique chosen = cliques[pick(rng)];
        for (int u : chosen.verts) out.graph.add_edge(v, u);
        std::vector<int> bag = chosen.verts;
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        int bag_id = static_cast<int>(out.decomposition.bags.size());
        out.decomposition.bags.push_back(bag);
        out.decomposition.tree_edges.emplace_back(chosen.home_bag, bag_id);
        for (int skip = 0; skip < k; ++skip) {
            Clique c;
            for (int i = 0; i < k; ++i)
                if (i != skip) c.verts.push_back(chosen.verts[i]);
            c.verts.push_back(v);
            c.home_bag = bag_id;
            cliques.push_back(std::move(c));
        }
    }
    out.graph.sort_adjacency();
    return out;
}

Graph drop_edges(const Graph& g, double drop, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Graph h(g.num_vertices());
    for (auto [u, v] : g.edges())
        if (coin(rng) >= drop) h.add_edge(u, v);
    h.sort_adjacency();
    return h;
}

namespace {

// Random triangulation chords of the polygon [lo..hi], kept with prob 1/2.
void outerplanar_chords(int lo, int hi, std::mt19937_64& rng, Graph& g) {
    if (hi - lo < 2) return;
    std::uniform_int_distribution<int> pick(lo + 1, hi - 1);
    int mid = pick(rng);
    if (mid - lo >= 2 && rng() % 2 == 0) g.add_edge(lo, mid);
    if (hi - mid >= 2 && rng() % 2 == 0) g.add_edge(mid, hi);
    outerplanar_chords(lo, mid, rng, g);
    outerplanar_chords(mid, hi, rng, g);
}

}  // namespace

Graph random_outerplanar(int n, uint64_t seed) {
    if (n < 3) throw std::invalid_argument("random_outerplanar: need n >= 3");
    std::mt19937_64 rng(seed);
    Graph g = cycle_graph(n);
    outerplanar_chords(0, n - 1, rng, g);
    g.sort_adjacency();
    return g;
}

namespace {

// Rotation system from a straight-line drawing: neighbors ordered
// counterclockwise around each vertex.
RotationSystem rotation_from_coordinates(const Graph& g, const std::vector<std::pair<double, double>>& xy) {
    RotationSystem rs;
    rs.rotation.resize(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<int> nb = g.neighbors(v);
        std::sort(nb.begin(), nb.end(), [&](int a, int b) {
            double aa = std::atan2(xy[a].second - xy[v].second, xy[a].first - xy[v].first);
            double ab = std::atan2(xy[b].second - xy[v].second, xy[b].first - xy[v].first);
            return aa < ab;
        });
        rs.rotation[v] = std::move(nb);
    }
    return rs;
}

}  // namespace

Graph dodecahedron() {
    // Rings: outer pentagon A (0..4), spoke ring B (5..9), zigzag ring C
    // (10..14), inner pentagon D (15..19).
    Graph g(20);
    auto A = [](int i) { return (i % 5 + 5) % 5; };
    for (int i = 0; i < 5; ++i) {
        g.add_edge(A(i), A(i + 1));
        g.add_edge(i, 5 + i);
        g.add_edge(5 + i, 10 + i);
        g.add_edge(10 + i, 5 + A(i + 1));
        g.add_edge(10 + i, 15 + i);
        g.add_edge(15 + i, 15 + A(i + 1));
    }
    g.sort_adjacency();
    return g;
}

RotationSystem dodecahedron_embedding() {
    Graph g = dodecahedron();
    std::vector<std::pair<double, double>> xy(20);
    auto place = [&](int v, double radius, double deg) {
        xy[v] = {radius * std::cos(deg * M_PI / 180.0), radius * std::sin(deg * M_PI / 180.0)};
    };
    for (int i = 0; i < 5; ++i) {
        place(i, 4.0, 72.0 * i);
        place(5 + i, 3.0, 72.0 * i);
        place(10 + i, 2.0, 72.0 * i + 36.0);
        place(15 + i, 1.0, 72.0 * i + 36.0);
    }
    RotationSystem rs = rotation_from_coordinates(g, xy);
    // The outer face is the A-ring pentagon; locate it among the traced faces.
    auto fs = faces(g, rs);
    for (size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].length() != 5) continue;
        bool all_a = true;
        for (int v : fs[i].walk) all_a &= v < 5;
        if (all_a) {
            rs.outer_face = static_cast<int>(i);
            return rs;
        }
    }
    throw std::logic_error("dodecahedron_embedding: outer pentagon not found");
}

namespace {

int pair_index(int u, int v, int n) {
    if (u > v) std::swap(u, v);
    // Index of pair (u, v), u < v, in lexicographic pair order.
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

}  // namespace

std::vector<Graph> all_graphs_up_to_iso(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("all_graphs_up_to_iso: n must be in [1, 6]");
    int bits = n * (n - 1) / 2;
    // Per permutation, where each pair-bit lands.
    std::vector<std::array<int, 15>> remap;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::array<int, 15> r{};
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                r[pair_index(u, v, n)] = pair_index(perm[u], perm[v], n);
        remap.push_back(r);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Graph> out;
    for (uint32_t mask = 0; mask < (1u << bits); ++mask) {
        uint32_t canon = mask;
        for (const auto& r : remap) {
            uint32_t img = 0;
            for (int b = 0; b < bits; ++b)
                if (mask & (1u << b)) img |= 1u << r[b];
            canon = std::min(canon, img);
            if (canon < mask) break;
        }
        if (canon != mask) continue;
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (mask & (1u << pair_index(u, v, n))) g.add_edge(u, v);
        g.sort_adjacency();
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace tww
