#pragma once

#include <string>
#include <vector>

#include "tww/graph.hpp"
#include "tww/tree_decomposition.hpp"

namespace tww {

// Combinatorial embedding: per vertex, the cyclic order of its neighbors.
// Face walks are traced with the convention that after entering v from u the
// walk leaves along the successor of u in rotation[v]. outer_face indexes
// into the canonical face enumeration (faces() below).
struct RotationSystem {
    std::vector<std::vector<int>> rotation;
    int outer_face = 0;
};

// A face as its closed walk of vertices (w0, w1, ..., w_{l-1}); consecutive
// walk vertices (cyclically) are joined by edges. Walks may repeat vertices
// at cut vertices. Canonical enumeration: each face is rooted at its
// smallest directed edge and faces are ordered by that edge.
struct FaceWalk {
    std::vector<int> walk;
    int length() const { return static_cast<int>(walk.size()); }
};

// Traces all faces of the embedding. Throws if the rotation system does not
// match the graph's adjacency.
std::vector<FaceWalk> faces(const Graph& g, const RotationSystem& rs);

// Checks rotation/adjacency agreement and the Euler relation. Faces are
// traced per component, so n - m + f = 2 * #components (= 2 when connected).
ValidationReport validate_embedding(const Graph& g, const RotationSystem& rs);

// Result of triangulating: the augmented graph, its embedding, and the face
// id that the original outer face turned into.
struct Triangulation {
    Graph graph;
    RotationSystem embedding;
};

// Adds chords until every face is a triangle (n >= 3, connected input).
// The original outer face keeps its identity: the output's outer_face is the
// piece of the old outer face containing its first directed edge. Output is
// simple and embedded; a face-length audit runs before returning.
Triangulation triangulate(const Graph& g, const RotationSystem& rs);

// Random maximal planar graph built by repeatedly placing a new vertex
// inside a uniformly chosen internal face of a seed triangle. n >= 3;
// deterministic per seed. The outer face is the seed triangle.
Triangulation random_planar_triangulation(int n, uint64_t seed);

// Adds the chord walk[p]-walk[q] inside the face `walk` (non-adjacent
// positions, distinct vertices, edge absent) and returns the two sub-walks:
// first walk[p..q], then walk[q..p] (cyclically).
std::pair<std::vector<int>, std::vector<int>> insert_chord(Graph& g, RotationSystem& rs,
                                                           const std::vector<int>& walk, int p, int q);

// Places a fresh vertex inside the face `walk`, attached to the walk
// positions `attach` (strictly increasing, nonempty, distinct vertices).
// Returns the new vertex id; the caller maintains its own face lists.
int insert_vertex_in_face(Graph& g, RotationSystem& rs, const std::vector<int>& walk,
                          const std::vector<int>& attach);

// BFS layering from `root` using rotation order for neighbor expansion.
struct BfsLayering {
    int root = 0;
    std::vector<int> layer;   // BFS distance from root
    std::vector<int> parent;  // -1 at root
};

BfsLayering bfs_layering(const Graph& g, const RotationSystem& rs, int root);

// Smallest vertex on the outer face walk; the default layering root.
int default_root(const Graph& g, const RotationSystem& rs);

}  // namespace tww
