#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "tww/branch_decomposition.hpp"
#include "tww/embedding.hpp"
#include "tww/graph.hpp"
#include "tww/tree_decomposition.hpp"
#include "tww/trigraph.hpp"

namespace tww {

// Every parser throws ParseError with a line / context note on bad input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- plain text graph formats ---

// Edge list: first line "n m", then m lines "u v" (0-based). '#' comments.
Graph parse_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// graph6 (one graph per line; optional >>graph6<< header).
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

// PACE 2017 .gr: "p tw n m" header, 1-based edges, 'c' comments.
// Duplicate edges are ignored; loops rejected.
Graph parse_pace_gr(std::istream& in);
void write_pace_gr(std::ostream& out, const Graph& g);

// PACE 2017 .td: "s td <bags> <width+1> <n>", 'b' lines, tree edges.
TreeDecomposition parse_pace_td(std::istream& in);
void write_pace_td(std::ostream& out, const TreeDecomposition& td, int n);

// --- JSON formats ---

// {"n": int, "edges": [[u, v], ...]}
Graph graph_from_json(const std::string& text);
std::string graph_to_json(const Graph& g);

// {"n": int, "claimed_width": int|null, "steps": [{"u":, "v":, "w":}, ...]}
// Field order is fixed so serialization is byte-deterministic.
ContractionSequence sequence_from_json(const std::string& text);
std::string sequence_to_json(const ContractionSequence& seq);

// {"nodes": int, "edges": [[a, b], ...], "leaf_map": [{"leaf":, "edge": [u, v]}, ...]}
BranchDecomposition branch_decomposition_from_json(const std::string& text);
std::string branch_decomposition_to_json(const BranchDecomposition& bd);

// {"rotation": [[...], ...], "outer_face": int}
RotationSystem rotation_from_json(const std::string& text);
std::string rotation_to_json(const RotationSystem& rs);

// --- file helpers ---

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Loads a graph, inferring the format from the file extension (.g6, .gr,
// .json, anything else = edge list), with content sniffing as fallback.
Graph load_graph(const std::string& path);

}  // namespace tww
