#include "tww/tree_decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>
#include <stdexcept>

namespace tww {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

namespace {

// Connectivity + edge count make the edge set a tree on `nodes` vertices.
bool forms_tree(int nodes, const std::vector<std::pair<int, int>>& edges, std::string& why) {
    if (static_cast<int>(edges.size()) != nodes - 1) {
        why = "tree should have " + std::to_string(nodes - 1) + " edges, has " + std::to_string(edges.size());
        return false;
    }
    std::vector<std::vector<int>> adj(nodes);
    for (auto [a, b] : edges) {
        if (a < 0 || a >= nodes || b < 0 || b >= nodes || a == b) {
            why = "bad tree edge " + std::to_string(a) + "-" + std::to_string(b);
            return false;
        }
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(nodes, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                q.push(y);
            }
    }
    if (reached != nodes) {
        why = "bag tree is disconnected";
        return false;
    }
    return true;
}

}  // namespace

ValidationReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    ValidationReport rep;
    int n = g.num_vertices();
    int b = static_cast<int>(td.bags.size());
    if (b == 0) {
        if (n > 0) rep.fail("no bags");
        return rep;
    }

    std::vector<std::vector<int>> sorted_bags(b);
    for (int i = 0; i < b; ++i) {
        sorted_bags[i] = td.bags[i];
        std::sort(sorted_bags[i].begin(), sorted_bags[i].end());
        for (int v : sorted_bags[i])
            if (v < 0 || v >= n) return rep.fail("bag " + std::to_string(i) + " contains out-of-range vertex");
        if (std::adjacent_find(sorted_bags[i].begin(), sorted_bags[i].end()) != sorted_bags[i].end())
            return rep.fail("bag " + std::to_string(i) + " repeats a vertex");
    }

    std::string why;
    if (!forms_tree(b, td.tree_edges, why)) return rep.fail(why);

    std::vector<std::vector<int>> bags_of(n);
    for (int i = 0; i < b; ++i)
        for (int v : sorted_bags[i]) bags_of[v].push_back(i);
    for (int v = 0; v < n; ++v)
        if (bags_of[v].empty()) return rep.fail("vertex " + std::to_string(v) + " is in no bag");

    auto in_bag = [&](int i, int v) {
        return std::binary_search(sorted_bags[i].begin(), sorted_bags[i].end(), v);
    };
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int i : bags_of[u])
            if (in_bag(i, v)) {
                covered = true;
                break;
            }
        if (!covered)
            return rep.fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
    }

    std::vector<std::vector<int>> tree_adj(b);
    for (auto [a, c] : td.tree_edges) {
        tree_adj[a].push_back(c);
        tree_adj[c].push_back(a);
    }
    for (int v = 0; v < n; ++v) {
        std::queue<int> q;
        std::set<int> member(bags_of[v].begin(), bags_of[v].end());
        std::set<int> seen;
        q.push(bags_of[v][0]);
        seen.insert(bags_of[v][0]);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : tree_adj[x])
                if (member.count(y) && !seen.count(y)) {
                    seen.insert(y);
                    q.push(y);
                }
        }
        if (seen.size() != member.size())
            return rep.fail("bags containing vertex " + std::to_string(v) + " are not connected in the tree");
    }
    return rep;
}

CleanDecomposition clean_decomposition(const Graph& g, const TreeDecomposition& td) {
    {
        ValidationReport rep = validate_tree_decomposition(g, td);
        if (!rep.ok) throw std::invalid_argument("clean_decomposition: invalid input: " + rep.errors.front());
    }
    int n = g.num_vertices();
    CleanDecomposition cd;
    cd.parent.assign(n, -1);
    cd.upsets.assign(n, {});
    cd.width = 0;
    if (n == 0) return cd;

    // Chordal supergraph: every bag becomes a clique. Its clique number is at
    // most td.width() + 1 and it contains every edge of g.
    std::vector<std::set<int>> h(n);
    for (const auto& bag : td.bags)
        for (size_t i = 0; i < bag.size(); ++i)
            for (size_t j = i + 1; j < bag.size(); ++j) {
                h[bag[i]].insert(bag[j]);
                h[bag[j]].insert(bag[i]);
            }

    // Maximum cardinality search; reverse visit order is a perfect
    // elimination order of the chordal supergraph.
    std::vector<int> weight(n, 0), visit_order;
    std::vector<char> visited(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!visited[v] && (best < 0 || weight[v] > weight[best])) best = v;
        visited[best] = 1;
        visit_order.push_back(best);
        for (int u : h[best])
            if (!visited[u]) ++weight[u];
    }
    std::vector<int> pos(n);  // elimination position, 0 removed first
    for (int i = 0; i < n; ++i) pos[visit_order[i]] = n - 1 - i;
    std::vector<int> elim(n);
    for (int v = 0; v < n; ++v) elim[pos[v]] = v;

    // Symbolic elimination of g along that order. The filled up-neighborhood
    // of each vertex stays inside its chordal-supergraph up-clique, so its
    // size is at most td.width().
    std::vector<std::set<int>> up(n);
    for (auto [u, v] : g.edges()) {
        if (pos[u] < pos[v])
            up[u].insert(v);
        else
            up[v].insert(u);
    }
    for (int i = 0; i < n; ++i) {
        int x = elim[i];
        if (up[x].empty()) continue;
        int par = *std::min_element(up[x].begin(), up[x].end(),
                                    [&](int a, int b) { return pos[a] < pos[b]; });
        cd.parent[x] = par;
        for (int y : up[x])
            if (y != par) up[par].insert(y);
    }

    std::vector<int> depth(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        int x = elim[i];
        depth[x] = cd.parent[x] < 0 ? 0 : depth[cd.parent[x]] + 1;
    }
    for (int v = 0; v < n; ++v) {
        cd.upsets[v].assign(up[v].begin(), up[v].end());
        std::sort(cd.upsets[v].begin(), cd.upsets[v].end(),
                  [&](int a, int b) { return depth[a] < depth[b]; });
        cd.width = std::max(cd.width, static_cast<int>(cd.upsets[v].size()));
    }
    assert(cd.width <= std::max(td.width(), 0));
    return cd;
}

ValidationReport validate_clean_decomposition(const Graph& g, const CleanDecomposition& cd) {
    ValidationReport rep;
    int n = g.num_vertices();
    if (static_cast<int>(cd.parent.size()) != n) return rep.fail("parent array has wrong size");
    if (static_cast<int>(cd.upsets.size()) != n) return rep.fail("upsets array has wrong size");

    std::vector<std::vector<int>> children(n);
    std::vector<int> roots;
    for (int v = 0; v < n; ++v) {
        int p = cd.parent[v];
        if (p == v || p < -1 || p >= n) return rep.fail("bad parent of vertex " + std::to_string(v));
        if (p < 0)
            roots.push_back(v);
        else
            children[p].push_back(v);
    }

    // DFS over the claimed forest; interval nesting gives the ancestor test.
    std::vector<int> tin(n, -1), tout(n, -1), depth(n, 0);
    int clock = 0;
    for (int r : roots) {
        std::vector<std::pair<int, size_t>> stack{{r, 0}};
        tin[r] = clock++;
        while (!stack.empty()) {
            auto& [x, ci] = stack.back();
            if (ci < children[x].size()) {
                int c = children[x][ci++];
                depth[c] = depth[x] + 1;
                tin[c] = clock++;
                stack.emplace_back(c, 0);
            } else {
                tout[x] = clock++;
                stack.pop_back();
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (tin[v] < 0) return rep.fail("parent pointers contain a cycle through vertex " + std::to_string(v));

    auto is_ancestor = [&](int a, int x) { return tin[a] <= tin[x] && tout[x] <= tout[a]; };

    for (auto [u, v] : g.edges())
        if (!is_ancestor(u, v) && !is_ancestor(v, u))
            return rep.fail("edge " + std::to_string(u) + "-" + std::to_string(v) +
                            " joins incomparable vertices");

    int width = 0;
    for (int u = 0; u < n; ++u) {
        const std::vector<int>& f = cd.upsets[u];
        width = std::max(width, static_cast<int>(f.size()));
        for (size_t i = 0; i < f.size(); ++i) {
            int a = f[i];
            if (a < 0 || a >= n || a == u || !is_ancestor(a, u))
                return rep.fail("upset of " + std::to_string(u) + " contains a non-ancestor");
            if (i > 0 && depth[f[i - 1]] >= depth[a])
                return rep.fail("upset of " + std::to_string(u) + " is not sorted by depth");
        }
        if (cd.parent[u] >= 0 && std::find(f.begin(), f.end(), cd.parent[u]) == f.end())
            return rep.fail("upset of " + std::to_string(u) + " misses the parent");

        // The upset must equal the set of proper ancestors with an edge into
        // the subtree below u.
        std::set<int> reach;
        std::vector<int> stack{u};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int c : children[x]) stack.push_back(c);
            for (int a : g.neighbors(x))
                if (a != u && is_ancestor(a, u)) reach.insert(a);
        }
        std::set<int> have(f.begin(), f.end());
        if (reach != have)
            return rep.fail("upset of " + std::to_string(u) +
                            " does not match the ancestors adjacent to its subtree");
    }
    if (width > cd.width) return rep.fail("recorded width is smaller than an upset");
    return rep;
}

TreeDecomposition min_fill_decomposition(const Graph& g) {
    int n = g.num_vertices();
    TreeDecomposition td;
    if (n == 0) return td;

    std::vector<std::set<int>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }

    std::vector<char> alive(n, 1);
    std::vector<int> pos(n, -1), elim;
    std::vector<std::vector<int>> elim_nbrs(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long best_fill = -1;
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            long fill = 0;
            for (auto it = adj[v].begin(); it != adj[v].end(); ++it)
                for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
                    if (!adj[*it].count(*jt)) ++fill;
            if (best < 0 || fill < best_fill ||
                (fill == best_fill && adj[v].size() < adj[best].size())) {
                best = v;
                best_fill = fill;
            }
        }
        pos[best] = step;
        elim.push_back(best);
        elim_nbrs[best].assign(adj[best].begin(), adj[best].end());
        for (int a : adj[best])
            for (int b : adj[best])
                if (a < b && !adj[a].count(b)) {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
        for (int a : adj[best]) adj[a].erase(best);
        adj[best].clear();
        alive[best] = 0;
    }

    td.bags.resize(n);
    std::vector<int> roots;
    for (int i = 0; i < n; ++i) {
        int v = elim[i];
        td.bags[i] = elim_nbrs[v];
        td.bags[i].push_back(v);
        std::sort(td.bags[i].begin(), td.bags[i].end());
        if (elim_nbrs[v].empty()) {
            roots.push_back(i);
        } else {
            int par = *std::min_element(elim_nbrs[v].begin(), elim_nbrs[v].end(),
                                        [&](int a, int b) { return pos[a] < pos[b]; });
            td.tree_edges.emplace_back(i, pos[par]);
        }
    }
    // One root per component; chain them so the bag graph is a tree.
    for (size_t i = 1; i < roots.size(); ++i) td.tree_edges.emplace_back(roots[i - 1], roots[i]);
    return td;
}

}  // namespace tww
