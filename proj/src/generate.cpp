#include "gis/generate.hpp"

#include <cmath>

#include "gis/rng.hpp"

namespace gis {

graph generate_instance(const gen_params& p) {
    if (p.edge_prob < 0 || p.edge_prob > 1) throw invalid_input("edge_prob must be in [0,1]");
    if (p.removable_frac < 0 || p.removable_frac > 1)
        throw invalid_input("removable_frac must be in [0,1]");
    if (p.profit_min > p.profit_max) throw invalid_input("empty profit range");
    if (p.penalty_min > p.penalty_max) throw invalid_input("empty penalty range");
    if (p.scale < 0 || p.scale > 18) throw invalid_input("scale must be in 0..18");

    rng r(p.seed);
    graph g(p.n, p.scale);
    for (vertex_id v = 0; v < p.n; ++v)
        g.set_profit(v, benefit(r.range(p.profit_min, p.profit_max)));

    // Geometric skip sampling over the lexicographic pair sequence, so
    // sparse instances cost O(edges) instead of O(n^2).
    const std::uint64_t n = p.n;
    const std::uint64_t total = n < 2 ? 0 : n * (n - 1) / 2;
    if (total == 0 || p.edge_prob <= 0) return g;
    const double log1m = std::log1p(-p.edge_prob);  // -inf when edge_prob == 1

    std::uint64_t pos = 0, row_start = 0;
    vertex_id u = 0;
    while (pos < total) {
        if (p.edge_prob < 1.0) {
            double u01 = 1.0 - r.unit();  // (0,1]
            double gap = std::floor(std::log(u01) / log1m);
            if (gap >= static_cast<double>(total - pos)) break;
            pos += static_cast<std::uint64_t>(gap);
        }
        while (pos >= row_start + (n - 1 - u)) {
            row_start += n - 1 - u;
            ++u;
        }
        vertex_id v = static_cast<vertex_id>(u + 1 + (pos - row_start));
        if (r.unit() < p.removable_frac)
            g.add_removable_edge(u, v, benefit(r.range(p.penalty_min, p.penalty_max)));
        else
            g.add_permanent_edge(u, v);
        ++pos;
    }
    return g;
}

}  // namespace gis
