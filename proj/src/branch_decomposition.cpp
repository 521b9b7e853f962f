#include "tww/branch_decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace tww {

namespace {

struct RootedTree {
    std::vector<int> order;            // BFS order from node 0
    std::vector<int> parent;           // -1 at root
    std::vector<int> parent_edge;     // index into tree_edges, -1 at root
    bool ok = true;
};

RootedTree root_tree(int nodes, const std::vector<std::pair<int, int>>& edges) {
    RootedTree rt;
    rt.parent.assign(nodes, -2);
    rt.parent_edge.assign(nodes, -1);
    if (nodes == 0) return rt;
    std::vector<std::vector<std::pair<int, int>>> adj(nodes);
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        auto [a, b] = edges[i];
        if (a < 0 || a >= nodes || b < 0 || b >= nodes || a == b) {
            rt.ok = false;
            return rt;
        }
        adj[a].emplace_back(b, i);
        adj[b].emplace_back(a, i);
    }
    std::queue<int> q;
    q.push(0);
    rt.parent[0] = -1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        rt.order.push_back(x);
        for (auto [y, ei] : adj[x])
            if (rt.parent[y] == -2) {
                rt.parent[y] = x;
                rt.parent_edge[y] = ei;
                q.push(y);
            }
    }
    rt.ok = static_cast<int>(rt.order.size()) == nodes &&
            static_cast<int>(edges.size()) == nodes - 1;
    return rt;
}

}  // namespace

std::vector<std::vector<int>> middle_sets(const Graph& g, const BranchDecomposition& bd) {
    std::vector<std::vector<int>> mid(bd.tree_edges.size());
    if (bd.num_nodes == 0) return mid;
    RootedTree rt = root_tree(bd.num_nodes, bd.tree_edges);
    if (!rt.ok) throw std::invalid_argument("middle_sets: node/edge lists do not form a tree");

    int n = g.num_vertices();
    std::vector<std::vector<int>> leaves_of(n);
    for (const auto& [leaf, e] : bd.leaf_map) {
        leaves_of[e.first].push_back(leaf);
        leaves_of[e.second].push_back(leaf);
    }

    // For each graph vertex, a tree edge separates some of its leaves from
    // the others exactly when the subtree below the edge holds some but not
    // all of them.
    std::vector<int> cnt(bd.num_nodes, 0);
    for (int v = 0; v < n; ++v) {
        int total = static_cast<int>(leaves_of[v].size());
        if (total == 0) continue;
        for (int leaf : leaves_of[v]) ++cnt[leaf];
        for (auto it = rt.order.rbegin(); it != rt.order.rend(); ++it) {
            int x = *it;
            if (cnt[x] == 0 || rt.parent[x] < 0) continue;
            if (cnt[x] < total) mid[rt.parent_edge[x]].push_back(v);
            cnt[rt.parent[x]] += cnt[x];
            cnt[x] = 0;
        }
        cnt[rt.order.front()] = 0;
    }
    return mid;
}

int branch_width(const Graph& g, const BranchDecomposition& bd) {
    int w = 0;
    for (const std::vector<int>& m : middle_sets(g, bd)) w = std::max(w, static_cast<int>(m.size()));
    return w;
}

ValidationReport validate_branch_decomposition(const Graph& g, const BranchDecomposition& bd) {
    ValidationReport rep;
    int m = g.num_edges();
    if (bd.num_nodes == 0) {
        if (m > 0) rep.fail("empty decomposition for a graph with edges");
        if (!bd.tree_edges.empty() || !bd.leaf_map.empty()) rep.fail("empty decomposition with stray data");
        return rep;
    }
    if (static_cast<int>(bd.tree_edges.size()) != bd.num_nodes - 1)
        return rep.fail("tree should have " + std::to_string(bd.num_nodes - 1) + " edges");
    std::vector<int> degree(bd.num_nodes, 0);
    for (auto [a, b] : bd.tree_edges) {
        if (a < 0 || a >= bd.num_nodes || b < 0 || b >= bd.num_nodes || a == b)
            return rep.fail("bad tree edge " + std::to_string(a) + "-" + std::to_string(b));
        ++degree[a];
        ++degree[b];
    }
    RootedTree rt = root_tree(bd.num_nodes, bd.tree_edges);
    if (!rt.ok) return rep.fail("tree is disconnected");

    std::vector<char> is_leaf(bd.num_nodes, 0);
    std::vector<std::pair<int, int>> mapped;
    for (const auto& [leaf, e] : bd.leaf_map) {
        if (leaf < 0 || leaf >= bd.num_nodes) return rep.fail("leaf id out of range");
        if (is_leaf[leaf]) return rep.fail("node " + std::to_string(leaf) + " mapped twice");
        is_leaf[leaf] = 1;
        int u = std::min(e.first, e.second), v = std::max(e.first, e.second);
        if (u < 0 || v >= g.num_vertices() || u == v || !g.has_edge(u, v))
            return rep.fail("leaf carries a non-edge " + std::to_string(u) + "-" + std::to_string(v));
        mapped.emplace_back(u, v);
    }
    for (int x = 0; x < bd.num_nodes; ++x) {
        if (is_leaf[x] && degree[x] > 1)
            return rep.fail("mapped node " + std::to_string(x) + " has tree degree " + std::to_string(degree[x]));
        if (!is_leaf[x] && degree[x] != 3)
            return rep.fail("internal node " + std::to_string(x) + " has tree degree " + std::to_string(degree[x]));
    }
    std::sort(mapped.begin(), mapped.end());
    if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end())
        return rep.fail("a graph edge appears on two leaves");
    std::vector<std::pair<int, int>> all = g.edges();
    std::sort(all.begin(), all.end());
    if (mapped != all) return rep.fail("leaves do not cover the edge set exactly");
    return rep;
}

namespace {

// Width of the (possibly partial) tree over the inserted leaf set, using
// per-vertex leaf masks. Middle sets only grow as leaves are added, so this
// is a valid lower bound for every completion.
int tree_width_over(const std::vector<std::pair<int, int>>& tree_edges, int nodes, int num_leaves,
                    uint32_t inserted, const std::vector<uint32_t>& vertex_mask) {
    std::vector<std::vector<std::pair<int, int>>> adj(nodes);
    for (int i = 0; i < static_cast<int>(tree_edges.size()); ++i) {
        adj[tree_edges[i].first].emplace_back(tree_edges[i].second, i);
        adj[tree_edges[i].second].emplace_back(tree_edges[i].first, i);
    }
    // Leaf mask on one side of each tree edge, computed by peeling degree-1
    // nodes inward.
    std::vector<uint32_t> below(tree_edges.size(), 0);
    std::vector<int> deg(nodes, 0);
    for (auto [a, b] : tree_edges) {
        ++deg[a];
        ++deg[b];
    }
    std::queue<int> q;
    std::vector<char> removed(nodes, 0);
    std::vector<uint32_t> acc(nodes, 0);
    for (int x = 0; x < nodes; ++x) {
        if (x < num_leaves) acc[x] = (inserted >> x) & 1u ? (1u << x) : 0u;
        if (deg[x] <= 1) q.push(x);
    }
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (removed[x]) continue;
        removed[x] = 1;
        for (auto [y, ei] : adj[x])
            if (!removed[y]) {
                below[ei] = acc[x];
                acc[y] |= acc[x];
                if (--deg[y] <= 1) q.push(y);
            }
    }

    int n = static_cast<int>(vertex_mask.size());
    int best = 0;
    for (size_t i = 0; i < tree_edges.size(); ++i) {
        uint32_t side = below[i] & inserted;
        uint32_t other = inserted & ~side;
        int cnt = 0;
        for (int v = 0; v < n; ++v)
            if ((vertex_mask[v] & side) && (vertex_mask[v] & other)) ++cnt;
        best = std::max(best, cnt);
    }
    return best;
}

struct ExactBwSearch {
    int m = 0;
    int nodes = 0;
    std::vector<uint32_t> vertex_mask;
    std::vector<std::pair<int, int>> tree_edges;
    int best = 0;

    void go(int leaf) {
        uint32_t inserted = (1u << leaf) - 1;
        int cur = tree_width_over(tree_edges, nodes, m, inserted, vertex_mask);
        if (cur >= best) return;
        if (leaf == m) {
            best = cur;
            return;
        }
        size_t existing = tree_edges.size();
        for (size_t i = 0; i < existing; ++i) {
            auto [a, b] = tree_edges[i];
            int c = nodes++;
            tree_edges[i] = {a, c};
            tree_edges.push_back({c, b});
            tree_edges.push_back({c, leaf});
            go(leaf + 1);
            tree_edges.pop_back();
            tree_edges.pop_back();
            tree_edges[i] = {a, b};
            --nodes;
        }
    }
};

}  // namespace

int exact_branchwidth(const Graph& g) {
    int m = g.num_edges();
    if (m > 9) throw std::invalid_argument("exact_branchwidth: too many edges");
    if (m < 2) return 0;

    std::vector<std::pair<int, int>> edges = g.edges();
    ExactBwSearch s;
    s.m = m;
    s.vertex_mask.assign(g.num_vertices(), 0);
    for (int i = 0; i < m; ++i) {
        s.vertex_mask[edges[i].first] |= 1u << i;
        s.vertex_mask[edges[i].second] |= 1u << i;
    }
    s.nodes = m;
    s.tree_edges = {{0, 1}};
    s.best = g.num_vertices() + 1;
    s.go(2);
    return s.best;
}

BranchDecomposition caterpillar_decomposition(const Graph& g, const std::vector<int>& edge_order) {
    int m = g.num_edges();
    if (static_cast<int>(edge_order.size()) != m)
        throw std::invalid_argument("caterpillar_decomposition: order has wrong length");
    {
        std::vector<int> check = edge_order;
        std::sort(check.begin(), check.end());
        for (int i = 0; i < m; ++i)
            if (check[i] != i) throw std::invalid_argument("caterpillar_decomposition: order is not a permutation");
    }
    std::vector<std::pair<int, int>> edges = g.edges();
    BranchDecomposition bd;
    if (m == 0) return bd;
    for (int i = 0; i < m; ++i) bd.leaf_map.emplace_back(i, edges[edge_order[i]]);
    if (m == 1) {
        bd.num_nodes = 1;
        return bd;
    }
    if (m == 2) {
        bd.num_nodes = 2;
        bd.tree_edges = {{0, 1}};
        return bd;
    }
    bd.num_nodes = 2 * m - 2;  // leaves 0..m-1, spine m..2m-3
    int first_spine = m;
    int last_spine = 2 * m - 3;
    bd.tree_edges.emplace_back(0, first_spine);
    bd.tree_edges.emplace_back(1, first_spine);
    for (int s = first_spine; s < last_spine; ++s) {
        bd.tree_edges.emplace_back(s, s + 1);
        bd.tree_edges.emplace_back(s - first_spine + 2, s + 1);
    }
    bd.tree_edges.emplace_back(m - 1, last_spine);
    return bd;
}

namespace {

// Caterpillar width for an edge order via first/last occurrence sweep: a
// vertex crosses the cut after position p iff its edge positions straddle it.
int caterpillar_width(const std::vector<std::pair<int, int>>& edges, const std::vector<int>& order,
                      int n) {
    int m = static_cast<int>(order.size());
    std::vector<int> first(n, -1), last(n, -1);
    for (int p = 0; p < m; ++p) {
        for (int v : {edges[order[p]].first, edges[order[p]].second}) {
            if (first[v] < 0) first[v] = p;
            last[v] = p;
        }
    }
    std::vector<int> delta(m + 1, 0);
    for (int v = 0; v < n; ++v)
        if (first[v] >= 0 && first[v] < last[v]) {
            ++delta[first[v]];
            --delta[last[v]];
        }
    int cur = 0, best = 0;
    for (int p = 0; p + 1 < m; ++p) {
        cur += delta[p];
        best = std::max(best, cur);
    }
    return best;
}

}  // namespace

BranchDecomposition heuristic_branch_decomposition(const Graph& g) {
    int n = g.num_vertices();
    int m = g.num_edges();
    std::vector<std::pair<int, int>> edges = g.edges();
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    if (m == 0) return caterpillar_decomposition(g, order);

    // BFS layers from each component's smallest vertex guide the base order.
    std::vector<int> dist(n, -1);
    for (const std::vector<int>& comp : connected_components(g)) {
        std::vector<int> d = bfs_distances(g, comp.front());
        for (int v : comp) dist[v] = d[v];
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto key = [&](int e) {
            return std::make_tuple(std::min(dist[edges[e].first], dist[edges[e].second]),
                                   std::max(dist[edges[e].first], dist[edges[e].second]), edges[e]);
        };
        return key(a) < key(b);
    });

    // Adjacent-transposition hill climb on the sweep width.
    int width = caterpillar_width(edges, order, n);
    for (int pass = 0; pass < 4; ++pass) {
        bool improved = false;
        for (int p = 0; p + 1 < m; ++p) {
            std::swap(order[p], order[p + 1]);
            int w = caterpillar_width(edges, order, n);
            if (w < width) {
                width = w;
                improved = true;
            } else {
                std::swap(order[p], order[p + 1]);
            }
        }
        if (!improved) break;
    }
    return caterpillar_decomposition(g, order);
}

namespace {

// Removes unmapped degree-2 tree nodes by splicing their two incident edges
// together, then renumbers nodes compactly.
void splice_degree_two(BranchDecomposition& bd) {
    std::vector<bool> mapped(bd.num_nodes, false);
    for (const auto& [leaf, e] : bd.leaf_map) mapped[leaf] = true;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> deg(bd.num_nodes, 0);
        for (const auto& [a, b] : bd.tree_edges) {
            ++deg[a];
            ++deg[b];
        }
        for (int x = 0; x < bd.num_nodes && !changed; ++x) {
            if (mapped[x] || deg[x] != 2) continue;
            std::vector<int> nbr;
            std::vector<std::pair<int, int>> kept;
            for (const auto& [a, b] : bd.tree_edges) {
                if (a == x)
                    nbr.push_back(b);
                else if (b == x)
                    nbr.push_back(a);
                else
                    kept.emplace_back(a, b);
            }
            assert(nbr.size() == 2);
            kept.emplace_back(nbr[0], nbr[1]);
            bd.tree_edges = std::move(kept);
            changed = true;
        }
    }
    // Compact ids: keep every node that is mapped or still carries an edge.
    std::vector<int> remap(bd.num_nodes, -1);
    int next = 0;
    std::vector<bool> used(bd.num_nodes, false);
    for (const auto& [leaf, e] : bd.leaf_map) used[leaf] = true;
    for (const auto& [a, b] : bd.tree_edges) used[a] = used[b] = true;
    for (int x = 0; x < bd.num_nodes; ++x)
        if (used[x]) remap[x] = next++;
    for (auto& [leaf, e] : bd.leaf_map) leaf = remap[leaf];
    for (auto& [a, b] : bd.tree_edges) {
        a = remap[a];
        b = remap[b];
    }
    bd.num_nodes = next;
}

struct TreeBdBuilder {
    BranchDecomposition bd;
    std::vector<std::vector<int>> kids;

    int new_node() { return bd.num_nodes++; }

    int leaf_for(int u, int v) {
        int x = new_node();
        bd.leaf_map.emplace_back(x, std::make_pair(std::min(u, v), std::max(u, v)));
        return x;
    }

    // Joins the items into a chain of degree-3 nodes; the returned top node
    // has one free slot for the caller to attach.
    int chain(const std::vector<int>& items) {
        assert(!items.empty());
        int cur = items[0];
        for (size_t i = 1; i < items.size(); ++i) {
            int j = new_node();
            bd.tree_edges.emplace_back(j, cur);
            bd.tree_edges.emplace_back(j, items[i]);
            cur = j;
        }
        return cur;
    }

    // Decomposition subtree covering all tree edges strictly below v plus the
    // edge (parent, v) when parent >= 0. The cut above the returned node
    // separates exactly those edges, so its middle set is within {parent, v}.
    int build(int parent, int v) {
        std::vector<int> items;
        for (int c : kids[v]) items.push_back(build(v, c));
        if (parent >= 0) items.push_back(leaf_for(parent, v));
        return chain(items);
    }
};

}  // namespace

BranchDecomposition tree_branch_decomposition(const Graph& g) {
    int n = g.num_vertices();
    if (g.num_edges() == 0) throw std::invalid_argument("forest has no edges");
    TreeBdBuilder builder;
    builder.kids.assign(n, {});
    std::vector<int> parent(n, -2);
    std::vector<int> roots;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 2) continue;
        int r = comp[0];
        parent[r] = -1;
        std::vector<int> queue{r};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int u : g.neighbors(v)) {
                if (parent[u] != -2) {
                    if (u != parent[v]) throw std::invalid_argument("graph is not a forest");
                    continue;
                }
                parent[u] = v;
                builder.kids[v].push_back(u);
                queue.push_back(u);
            }
        }
        roots.push_back(builder.build(-1, r));
    }
    builder.chain(roots);
    splice_degree_two(builder.bd);
    auto rep = validate_branch_decomposition(g, builder.bd);
    if (!rep.ok) throw std::logic_error("forest decomposition invalid: " + rep.errors.front());
    assert(branch_width(g, builder.bd) <= 2);
    return builder.bd;
}

}  // namespace tww
