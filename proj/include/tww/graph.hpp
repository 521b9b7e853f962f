#pragma once

#include <string>
#include <vector>

namespace tww {

// Simple undirected graph on vertices 0..n-1. No loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return m_; }

    void add_vertex() { adj_.emplace_back(); }

    // Inserting an existing edge or a loop is a caller bug.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    // Neighbor lists sorted ascending; call after bulk construction when a
    // canonical order is wanted.
    void sort_adjacency();

    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

// Connected components as vertex lists, each sorted ascending; components
// ordered by smallest contained vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Subgraph induced by `vertices` (need not be sorted). Vertex i of the result
// is vertices[i] of g.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// BFS distances from src; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);

}  // namespace tww
