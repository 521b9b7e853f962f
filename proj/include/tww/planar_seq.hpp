#pragma once

#include <array>
#include <utility>
#include <vector>

#include "tww/embedding.hpp"
#include "tww/graph.hpp"
#include "tww/trigraph.hpp"

namespace tww {

// One node of the region recursion: a region is a cycle of vertical paths of
// the BFS tree with the faces it encloses. The trace records how the region
// was split and how large its per-layer blocks were when it finished.
struct PlanarTraceNode {
    int num_paths = 0;
    int interior_size = 0;
    std::array<int, 3> sperner_face{-1, -1, -1};
    std::vector<std::pair<int, int>> layer_blocks;  // (BFS layer, block count)
    std::vector<PlanarTraceNode> children;
};

struct PlanarSeqResult {
    ContractionSequence seq;
    int max_boundary_paths = 0;  // largest path count of any region (expected <= 5)
    std::vector<PlanarTraceNode> components;
};

// Scans the internal faces of an embedded near-triangulation for one whose
// three corners carry all three colours {1,2,3}; returns its index, or -1.
// colour[v] == 0 means uncoloured and never matches.
int sperner_face(const std::vector<FaceWalk>& fs, const std::vector<int>& colour, int outer_face);

// Contraction sequence for an embedded planar graph with replayed width at
// most 183. Pipeline per component: triangulate, BFS-layer from a root on the
// outer face, recursively split the triangulation along vertical paths at a
// Sperner face, contract interior blocks layer by layer against the boundary
// paths, and finally collapse layers bottom-up.
PlanarSeqResult planar_contraction_sequence(const Graph& g, const RotationSystem& rs);

}  // namespace tww
