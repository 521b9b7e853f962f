#pragma once

#include <vector>

#include "tww/branch_decomposition.hpp"
#include "tww/embedding.hpp"
#include "tww/graph.hpp"
#include "tww/trigraph.hpp"

namespace tww {

// Maximum number of distinct neighbourhood traces a planar graph can realise
// on one side of a separating cycle through k vertices (k >= 1).
int noose_class_limit(int k);

// Width guarantee delivered by bw_contraction_sequence for an input branch
// decomposition of width k: max(4k, ceil(9k/2) - 3).
long bw_width_bound(int k);

// Planar graph that meets noose_class_limit(k) exactly: a k-cycle noose whose
// inside realises all 4k-4 traces. Requires k >= 3.
struct TightExample {
    Graph graph;
    RotationSystem embedding;
    std::vector<int> noose;  // the separating cycle, in cyclic order
};
TightExample tight_example(int k);

// Certificate for the class bound along one noose: the number of distinct
// neighbourhood traces realised by either side never exceeds the limit.
struct NooseCertificate {
    int k = 0;            // noose length
    int class_count = 0;  // max over the two sides
    int bound = 0;        // noose_class_limit(k)
    int inside_vertices = 0;
    int outside_vertices = 0;
};

// Checks the class bound for a cycle noose in an embedded planar graph.
// The noose must be a cycle of distinct, consecutively adjacent vertices;
// sides are determined by a dual flood fill that never crosses cycle edges.
// A bound violation is a hard error (it would disprove planarity of the
// input or mean the noose was not separating).
NooseCertificate verify_noose_bound(const Graph& g, const RotationSystem& rs,
                                    const std::vector<int>& noose);

// Extends a branch decomposition of the degree->=2 core of g (the maximal
// subgraph left after iteratively stripping degree-1 vertices) to all of g
// without increasing its width beyond max(core width, 2). Pendant trees are
// attached as width-<=2 subtrees at an edge whose middle set contains their
// anchor vertex.
BranchDecomposition extend_for_degree_one(const Graph& g, const BranchDecomposition& core_bd);

// Contraction sequence guided by a branch decomposition: the decomposition
// tree is rooted by subdividing its first edge, then processed bottom-up,
// keeping one block partition per tree edge and merging blocks by their
// neighbourhood traces on middle sets. For width-k input the replayed width
// is at most bw_width_bound(k). Disjoint unions of stars bypass the engine
// and get a direct width-0 sequence.
ContractionSequence bw_contraction_sequence(const Graph& g, const BranchDecomposition& bd);

// Driver: per connected component, builds a decomposition when none is given
// (stars direct, forests via tree_branch_decomposition, otherwise heuristic
// caterpillar on the stripped core extended back to the component), runs the
// engine, and stitches components. Reports the largest decomposition width
// used so callers can evaluate bw_width_bound.
struct BwSeqResult {
    ContractionSequence seq;
    int k = 0;
};
BwSeqResult bw_sequence(const Graph& g, const BranchDecomposition* bd = nullptr);

}  // namespace tww
