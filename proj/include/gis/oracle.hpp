#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gis/graph.hpp"

namespace gis {

// Exact optimum of a small instance, found by exhaustive enumeration. The
// ground truth every reduction and search test compares against.
struct oracle_result {
    benefit alpha;
    std::vector<vertex_id> witness;  // one optimal set, sorted
    std::uint64_t optimal_count = 0; // filled only when counting is requested
};

// Enumerates all generalized independent sets, pruning branches that would
// add a permanent conflict. Throws invalid_input when the alive vertex
// count exceeds limit.
oracle_result brute_force_alpha(const graph& g, std::size_t limit = 26, bool count_optima = false);

// Exact optimum over supersets of must_include.
oracle_result constrained_alpha(const graph& g, std::span<const vertex_id> must_include,
                                std::size_t limit = 26);

}  // namespace gis
