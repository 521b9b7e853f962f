#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tww/graph.hpp"
#include "tww/tree_decomposition.hpp"

namespace tww {

// Branch decomposition: an unrooted tree whose internal nodes have degree 3
// and whose leaves are in bijection with the edges of the graph.
struct BranchDecomposition {
    int num_nodes = 0;
    std::vector<std::pair<int, int>> tree_edges;
    // leaf node id -> the graph edge (u, v) it carries
    std::vector<std::pair<int, std::pair<int, int>>> leaf_map;
};

// The middle set of tree edge e: vertices incident to graph edges on both
// sides of e. Stored sets are never trusted; this recomputes from leaf_map.
// Result is indexed like bd.tree_edges; each set sorted ascending.
std::vector<std::vector<int>> middle_sets(const Graph& g, const BranchDecomposition& bd);

int branch_width(const Graph& g, const BranchDecomposition& bd);

// Structural checks: tree-ness, degree-3 internal nodes, leaf bijection onto
// E(g) with no duplicates or misses.
ValidationReport validate_branch_decomposition(const Graph& g, const BranchDecomposition& bd);

// Optimal branchwidth by enumerating every decomposition shape; |E| <= 9.
// Returns 0 for graphs with fewer than 2 edges (no decomposition needed).
int exact_branchwidth(const Graph& g);

// A linear ("caterpillar") decomposition following the given edge order.
BranchDecomposition caterpillar_decomposition(const Graph& g, const std::vector<int>& edge_order);

// BFS-guided caterpillar with a local improvement pass; meant for small-width
// inputs such as grids and outerplanar graphs. Heuristic width only.
BranchDecomposition heuristic_branch_decomposition(const Graph& g);

// Width <= 2 branch decomposition of a forest with at least one edge, built
// bottom-up so middle sets are {v} or {v, parent(v)}.
BranchDecomposition tree_branch_decomposition(const Graph& g);

}  // namespace tww
