#pragma once

#include <optional>

#include "tww/graph.hpp"
#include "tww/trigraph.hpp"

namespace tww {

// Minimum width over every full contraction order, by plain enumeration with
// no pruning or caching. Only for cross-checking the real solver; |V| <= 7.
int exhaustive_twinwidth(const Graph& g);

struct ExactResult {
    int width = 0;                // meaningful when !exceeded_budget
    bool exceeded_budget = false; // true: width > budget, search stopped
    ContractionSequence witness;  // optimal full sequence when solved
};

// Decision procedure: does g admit a full sequence of width <= d?
// When a witness pointer is given and the answer is yes, it receives one.
bool has_d_sequence(const Graph& g, int d, ContractionSequence* witness = nullptr);

// Exact twin-width by trying d = 0, 1, 2, ... Throws if |V| exceeds cap.
// With a budget, stops early and reports exceeded_budget once width > budget
// is certain.
ExactResult exact_twinwidth(const Graph& g, int cap = 10,
                            std::optional<int> budget = std::nullopt);

}  // namespace tww
