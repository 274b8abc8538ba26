#include "gis/oracle.hpp"

#include <algorithm>
#include <unordered_set>

namespace gis {

namespace {

struct enumerator {
    const graph& g;
    bool counting;
    std::vector<vertex_id> order;        // free vertices, ascending
    std::vector<std::uint32_t> blocked;  // # permanent conflicts with the set
    std::vector<std::uint8_t> in_set;
    std::vector<vertex_id> current;

    benefit best{INT64_MIN};
    std::vector<vertex_id> witness;
    std::uint64_t count = 0;

    enumerator(const graph& gr, bool cnt)
        : g(gr), counting(cnt), blocked(gr.vertex_count(), 0), in_set(gr.vertex_count(), 0) {}

    void record(benefit nb) {
        if (nb > best) {
            best = nb;
            witness = current;
            count = 1;
        } else if (counting && nb == best) {
            ++count;
        }
    }

    void rec(std::size_t idx, benefit nb) {
        if (idx == order.size()) {
            record(nb);
            return;
        }
        vertex_id v = order[idx];
        if (blocked[v] == 0) {
            benefit gain = g.profit(v);
            g.for_removable(v, [&](vertex_id x, benefit p) {
                if (in_set[x]) gain -= p;
            });
            current.push_back(v);
            in_set[v] = 1;
            g.for_permanent(v, [&](vertex_id x) { ++blocked[x]; });
            rec(idx + 1, nb + gain);
            g.for_permanent(v, [&](vertex_id x) { --blocked[x]; });
            in_set[v] = 0;
            current.pop_back();
        }
        rec(idx + 1, nb);
    }
};

oracle_result run_enumeration(const graph& g, std::span<const vertex_id> must_include,
                              std::size_t limit, bool count_optima) {
    if (g.alive_count() > limit)
        throw invalid_input("instance too large for exact enumeration (" +
                            std::to_string(g.alive_count()) + " > " + std::to_string(limit) + ")");
    if (!is_generalized_independent(g, must_include))
        throw invalid_input("must_include set is not generalized independent");

    enumerator e(g, count_optima);
    benefit base(0);
    std::unordered_set<vertex_id> fixed(must_include.begin(), must_include.end());
    for (vertex_id v : must_include) {
        e.in_set[v] = 1;
        e.current.push_back(v);
        g.for_permanent(v, [&](vertex_id x) { ++e.blocked[x]; });
    }
    base = net_benefit(g, must_include);
    for (vertex_id v : g.alive_vertices())
        if (!fixed.count(v)) e.order.push_back(v);
    std::sort(e.current.begin(), e.current.end());

    e.rec(0, base);

    oracle_result r;
    r.alpha = e.best;
    std::sort(e.witness.begin(), e.witness.end());
    r.witness = std::move(e.witness);
    r.optimal_count = e.count;
    return r;
}

}  // namespace

oracle_result brute_force_alpha(const graph& g, std::size_t limit, bool count_optima) {
    return run_enumeration(g, {}, limit, count_optima);
}

oracle_result constrained_alpha(const graph& g, std::span<const vertex_id> must_include,
                                std::size_t limit) {
    return run_enumeration(g, must_include, limit, false);
}

}  // namespace gis
