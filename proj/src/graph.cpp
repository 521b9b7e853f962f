#include "tww/graph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace tww {

void Graph::add_edge(int u, int v) {
    assert(u >= 0 && u < num_vertices() && v >= 0 && v < num_vertices());
    if (u == v) throw std::invalid_argument("add_edge: loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw std::invalid_argument("add_edge: duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::find(a.begin(), a.end(), other) != a.end();
}

void Graph::sort_adjacency() {
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(m_);
    for (int u = 0; u < num_vertices(); ++u)
        for (int v : adj_[u])
            if (u < v) es.emplace_back(u, v);
    std::sort(es.begin(), es.end());
    return es;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            out[id].push_back(u);
            for (int v : g.neighbors(u))
                if (comp[v] == -1) {
                    comp[v] = id;
                    q.push(v);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.num_vertices() <= 1 || connected_components(g).size() == 1;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> idx(g.num_vertices(), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) idx[vertices[i]] = i;
    Graph h(static_cast<int>(vertices.size()));
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
        for (int v : g.neighbors(vertices[i]))
            if (idx[v] > i) h.add_edge(i, idx[v]);
    return h;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.num_vertices(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u))
            if (dist[v] == -1) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

}  // namespace tww
