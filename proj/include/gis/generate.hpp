#pragma once

#include <cstdint>

#include "gis/graph.hpp"

namespace gis {

// Erdős–Rényi-style instance generator. Each pair becomes an edge with
// probability edge_prob; each edge is removable with probability
// removable_frac, permanent otherwise. Profits and penalties are uniform
// integers in the given (already scaled) ranges. Byte-identical output per
// seed.
struct gen_params {
    std::size_t n = 0;
    double edge_prob = 0.1;
    double removable_frac = 0.5;
    std::int64_t profit_min = -10;
    std::int64_t profit_max = 10;
    std::int64_t penalty_min = -5;
    std::int64_t penalty_max = 8;
    int scale = 0;
    std::uint64_t seed = 1;
};

graph generate_instance(const gen_params& p);

}  // namespace gis
