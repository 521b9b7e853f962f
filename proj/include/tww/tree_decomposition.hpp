#pragma once

#include <string>
#include <vector>

#include "tww/graph.hpp"

namespace tww {

// Tree decomposition: bags indexed 0..b-1 joined by tree edges.
struct TreeDecomposition {
    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> tree_edges;

    int width() const;  // max bag size - 1 (-1 if no bags)
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> errors;

    ValidationReport& fail(std::string why) {
        ok = false;
        errors.push_back(std::move(why));
        return *this;
    }
};

// Checks vertex coverage, edge coverage, connectivity of every vertex's bag
// set, and that the bag tree is in fact a tree.
ValidationReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

// Rooted spanning forest of G arranged so that every G-edge joins a vertex to
// one of its tree ancestors, together with, per vertex u, the set of proper
// ancestors of u adjacent (in G) to the subtree rooted at u. For non-root u
// that set always contains u's parent, and its size is at most `width`.
struct CleanDecomposition {
    std::vector<int> parent;               // -1 at roots
    std::vector<std::vector<int>> upsets;  // sorted by depth, shallowest first
    int width = 0;                         // max upset size
};

// Builds a CleanDecomposition whose width is at most the width of td.
// td must be a valid decomposition of g.
CleanDecomposition clean_decomposition(const Graph& g, const TreeDecomposition& td);

// Checks the defining properties of a CleanDecomposition against g.
ValidationReport validate_clean_decomposition(const Graph& g, const CleanDecomposition& cd);

// Greedy minimum-fill elimination order turned into a tree decomposition;
// a fallback when no decomposition is supplied. Width is heuristic.
TreeDecomposition min_fill_decomposition(const Graph& g);

}  // namespace tww
