#pragma once

#include <cstdint>
#include <vector>

#include "tww/embedding.hpp"
#include "tww/graph.hpp"
#include "tww/tree_decomposition.hpp"

namespace tww {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_graph(int n);
Graph grid_graph(int rows, int cols);

// Erdos-Renyi G(n, p); deterministic per seed.
Graph gnp(int n, double p, uint64_t seed);

// Random k-tree on n >= k + 1 vertices plus its natural width-k tree
// decomposition (one bag per vertex beyond the seed clique).
struct KTree {
    Graph graph;
    TreeDecomposition decomposition;
};
KTree random_ktree(int k, int n, uint64_t seed);

// Deletes each edge independently with probability drop; the decomposition
// stays valid for the subgraph.
Graph drop_edges(const Graph& g, double drop, uint64_t seed);

// Cycle 0..n-1 with a random set of non-crossing chords.
Graph random_outerplanar(int n, uint64_t seed);

// The dodecahedron with a planar embedding (n = 20, 3-regular).
Graph dodecahedron();
RotationSystem dodecahedron_embedding();

// Every graph on n <= 6 vertices up to isomorphism, in a deterministic
// order. Sizes: 1, 2, 4, 11, 34, 156 for n = 1..6.
std::vector<Graph> all_graphs_up_to_iso(int n);

}  // namespace tww
