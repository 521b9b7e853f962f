#pragma once

#include "tww/graph.hpp"
#include "tww/tree_decomposition.hpp"
#include "tww/trigraph.hpp"

namespace tww {

// Width certified by the clean-decomposition constructor: 3 * 2^(w-1) for
// width-w inputs, 0 for w == 0 (single vertices).
long tw_width_bound(int w);

// Contraction sequence for connected g built bottom-up over cd's tree.
// Replay width is at most tw_width_bound(cd.width). Construction-time
// invariants (class sizes, block sizes, red edges staying inside blocks,
// the width cap) throw std::logic_error when breached.
ContractionSequence tw_contraction_sequence(const Graph& g, const CleanDecomposition& cd);

// Driver for arbitrary graphs: splits into connected components, restricts td
// to each (or builds a min-fill decomposition per component when td is null),
// runs the constructor per component and stitches the sequences together,
// contracting the component representatives at the end (adding no red).
struct TwSeqResult {
    ContractionSequence seq;
    int clean_width = 0;  // largest clean-decomposition width used
};
TwSeqResult tw_sequence(const Graph& g, const TreeDecomposition* td);

}  // namespace tww
