#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tww/graph.hpp"

namespace tww {

// One contraction: u and v are merged into the fresh vertex w.
struct ContractionStep {
    int u = 0;
    int v = 0;
    int w = 0;
    bool operator==(const ContractionStep&) const = default;
};

// A (partial or full) contraction sequence for a graph on n vertices.
// Step i must use the fresh id n + i; a full sequence has n - 1 steps.
struct ContractionSequence {
    int n = 0;
    std::vector<ContractionStep> steps;
    std::optional<int> claimed_width;
    bool operator==(const ContractionSequence&) const = default;
};

// Graph with black (ordinary) and red (error) edges; every vertex pair is
// joined by at most one edge of one color. Vertices carry stable ids:
// contracting u and v retires both and allocates a fresh id, so ids are never
// reused. Adjacency lists are append-only with lazy removal of retired
// entries, which keeps a contraction at O(deg(u) + deg(v)) amortized.
class Trigraph {
public:
    Trigraph() = default;
    explicit Trigraph(int n);
    explicit Trigraph(const Graph& g);

    // Total ids ever allocated (retired ones included).
    int num_ids() const { return static_cast<int>(alive_.size()); }
    int num_alive() const { return alive_count_; }
    bool is_alive(int v) const { return v >= 0 && v < num_ids() && alive_[v]; }
    int original_n() const { return orig_n_; }

    void add_black_edge(int u, int v);
    void add_red_edge(int u, int v);

    bool has_black_edge(int u, int v) const;
    bool has_red_edge(int u, int v) const;

    // Alive neighbors, sorted ascending.
    std::vector<int> black_neighbors(int v) const;
    std::vector<int> red_neighbors(int v) const;

    int red_degree(int v) const { return red_deg_[v]; }
    int black_degree(int v) const;
    int max_red_degree() const;  // O(1) amortized
    std::vector<int> alive_vertices() const;

    // Contracts u and v into a fresh vertex and returns its id. The fresh
    // vertex is black-adjacent to the common black neighbors of u and v and
    // red-adjacent to every other neighbor of either.
    int contract(int u, int v);

    // Original vertices merged into v (sorted). An original vertex owns {v}.
    // Valid for alive vertices: contracting moves both lists into the fresh
    // vertex, so retired vertices surrender theirs.
    const std::vector<int>& origins(int v) const;

private:
    void require_alive(int v, const char* who) const;
    // Appends the alive entries of list into out.
    void collect_alive(const std::vector<int>& list, std::vector<int>& out) const;
    void compact(std::vector<int>& list) const;
    // Bucket bookkeeping so max_red_degree() needs no scan.
    void bump_red_deg(int v, int delta);
    void count_alive_degree(int d, int delta);

    std::vector<std::vector<int>> black_;  // may hold retired ids; filter on read
    std::vector<std::vector<int>> red_;
    std::vector<char> alive_;
    std::vector<int> red_deg_;
    // Origin lists are appended unsorted on contraction and sorted on first
    // read, so building a blob of b originals costs O(b) overall, not O(b^2).
    mutable std::vector<std::vector<int>> origins_;
    mutable std::vector<char> origins_sorted_;
    std::vector<int> deg_count_;  // alive vertices per red degree
    mutable int cur_max_ = 0;
    int alive_count_ = 0;
    int orig_n_ = 0;
};

struct ReplayResult {
    bool ok = false;
    int width = 0;           // max red degree seen after any step (0 for empty)
    int final_vertices = 0;  // alive vertices after the last applied step
    int error_step = -1;     // index of the offending step when !ok
    std::string error;
    std::vector<int> width_profile;  // max red degree after each step
};

// Replays seq on g from scratch, validating every step. A sequence is
// accepted if every step names two distinct alive vertices and allocates
// fresh ids in order (n, n+1, ...); it need not contract down to one vertex.
ReplayResult replay(const Graph& g, const ContractionSequence& seq);

// Replay that also checks seq is complete (ends at a single vertex) and, if
// a width is claimed, that the replayed width does not exceed it.
ReplayResult verify_sequence(const Graph& g, const ContractionSequence& seq);

struct NeighborhoodClass {
    std::vector<int> black_trace;  // sorted black neighbors within Y
    std::vector<int> red_trace;    // sorted red neighbors within Y
    std::vector<int> members;      // sorted members from X
};

// Partitions X by the pair (black trace, red trace) on Y. Classes are ordered
// by (black_trace, red_trace) lexicographically; members are sorted.
std::vector<NeighborhoodClass> neighborhood_classes(const Trigraph& t,
                                                    const std::vector<int>& xs,
                                                    const std::vector<int>& ys);

// Relabels a contraction sequence for an induced subgraph onto the vertex ids
// of the host graph, given host fresh-id base. Used to compose per-component
// sequences: `vertex_map` sends subgraph vertex i to its host id, and fresh
// subgraph ids are mapped to host ids handed out from host_fresh (advanced as
// steps are emitted).
std::vector<ContractionStep> relabel_steps(const std::vector<ContractionStep>& steps,
                                           int sub_n,
                                           const std::vector<int>& vertex_map,
                                           int& host_fresh);

}  // namespace tww
