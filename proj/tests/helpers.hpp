#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gis/generate.hpp"
#include "gis/graph.hpp"
#include "gis/oracle.hpp"
#include "gis/reduce.hpp"
#include "gis/rng.hpp"
#include "gis/rules.hpp"

namespace gis::testing {

// The toy instance from the overview figure, at scale 10: red set
// {0,1,2} with profits 2, 6, 5, one internal removable edge of penalty 1,
// vertex 0 additionally tied to the outside vertex 3 by a removable edge
// of penalty -2.5, and a permanent edge keeping 3 out of the red set.
inline graph fig1_instance() {
    graph g(4, 1);
    g.set_profit(0, benefit(20));
    g.set_profit(1, benefit(60));
    g.set_profit(2, benefit(50));
    g.set_profit(3, benefit(30));
    g.add_removable_edge(1, 2, benefit(10));
    g.add_removable_edge(0, 3, benefit(-25));
    g.add_permanent_edge(1, 3);
    return g;
}

// Random desk-scale instance with the acceptance corpus distributions:
// profits uniform [-10,10], penalties uniform [-5,8], mixed edge classes.
inline graph random_instance(std::uint64_t seed, std::size_t max_n = 14) {
    rng meta(seed);
    gen_params p;
    p.n = 3 + meta.below(max_n - 2);
    p.edge_prob = 0.05 + 0.6 * meta.unit();
    p.removable_frac = meta.unit();
    p.profit_min = -10;
    p.profit_max = 10;
    p.penalty_min = -5;
    p.penalty_max = 8;
    p.seed = meta.next();
    return generate_instance(p);
}

// Random forest: every vertex after the first few attaches to one earlier
// vertex; edge classes mixed.
inline graph random_forest(std::uint64_t seed, std::size_t n) {
    rng r(seed);
    graph g(n);
    for (vertex_id v = 0; v < n; ++v) g.set_profit(v, benefit(r.range(-10, 10)));
    for (vertex_id v = 1; v < n; ++v) {
        if (r.unit() < 0.1) continue;  // fresh root
        vertex_id parent = static_cast<vertex_id>(r.below(v));
        if (r.unit() < 0.5)
            g.add_permanent_edge(parent, v);
        else
            g.add_removable_edge(parent, v, benefit(r.range(-5, 8)));
    }
    return g;
}

// Random graph of maximum degree two: disjoint paths and cycles, mixed
// edge classes.
inline graph random_deg2(std::uint64_t seed, std::size_t n) {
    rng r(seed);
    graph g(n);
    for (vertex_id v = 0; v < n; ++v) g.set_profit(v, benefit(r.range(-10, 10)));
    std::vector<vertex_id> perm(n);
    for (vertex_id v = 0; v < n; ++v) perm[v] = v;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[r.below(i)]);
    std::size_t i = 0;
    auto link = [&](vertex_id a, vertex_id b) {
        if (r.unit() < 0.5)
            g.add_permanent_edge(a, b);
        else
            g.add_removable_edge(a, b, benefit(r.range(-5, 8)));
    };
    while (i < n) {
        std::size_t len = 1 + r.below(8);
        if (i + len > n) len = n - i;
        for (std::size_t k = 1; k < len; ++k) link(perm[i + k - 1], perm[i + k]);
        if (len >= 3 && r.unit() < 0.5) link(perm[i], perm[i + len - 1]);  // close a cycle
        i += len;
    }
    return g;
}

// One hand-built instance per tagged sub-case of the degree-based rules,
// applied through the grouped operations so no higher-priority rule can
// preempt the case under test.
struct subcase_fixture {
    std::string tag;
    graph g;
    vertex_id target;
    std::function<std::optional<reduction_event>(graph&, vertex_id)> op;
};

inline std::vector<subcase_fixture> degree_rule_fixtures() {
    std::vector<subcase_fixture> out;
    auto deg1 = [](graph& g, vertex_id u) { return apply_degree_one(g, u); };
    auto deg2 = [](graph& g, vertex_id u) { return apply_degree_two(g, u); };
    auto lowp = [](graph& g, vertex_id u) { return apply_low_perm_degree(g, u); };

    auto add = [&](const char* tag, graph g, vertex_id target, auto op) {
        out.push_back({tag, std::move(g), target, op});
    };

    {  // R7.1.1: removable pendant worth its penalty, nonnegative profit
        graph g(2);
        g.set_profit(0, benefit(5));
        g.set_profit(1, benefit(9));
        g.add_removable_edge(0, 1, benefit(2));
        add("R7.1.1", std::move(g), 0, deg1);
    }
    {  // R7.1.2: negative profit still covering the (negative) penalty
        graph g(2);
        g.set_profit(0, benefit(-1));
        g.set_profit(1, benefit(4));
        g.add_removable_edge(0, 1, benefit(-3));
        add("R7.1.2", std::move(g), 0, deg1);
    }
    {  // R7.2.1: permanent pendant dominating its neighbor
        graph g(2);
        g.set_profit(0, benefit(5));
        g.set_profit(1, benefit(3));
        g.add_permanent_edge(0, 1);
        add("R7.2.1", std::move(g), 0, deg1);
    }
    {  // R7.2.2: permanent pendant below the neighbor value
        graph g(2);
        g.set_profit(0, benefit(2));
        g.set_profit(1, benefit(7));
        g.add_permanent_edge(0, 1);
        add("R7.2.2", std::move(g), 0, deg1);
    }
    {  // R7.2.3: negative-profit pendant
        graph g(2);
        g.set_profit(0, benefit(-1));
        g.set_profit(1, benefit(7));
        g.add_permanent_edge(0, 1);
        add("R7.2.3", std::move(g), 0, deg1);
    }

    // R8: degree-two vertex 0 with neighbors 1,2 joined by a permanent edge
    auto base8 = [](benefit wu, benefit wx, benefit wy) {
        graph g(3);
        g.set_profit(0, wu);
        g.set_profit(1, wx);
        g.set_profit(2, wy);
        g.add_permanent_edge(1, 2);
        return g;
    };
    {
        graph g = base8(benefit(10), benefit(7), benefit(6));
        g.add_removable_edge(0, 1, benefit(3));
        g.add_removable_edge(0, 2, benefit(4));
        add("R8.1.1", std::move(g), 0, deg2);
    }
    {
        graph g = base8(benefit(-1), benefit(7), benefit(6));
        g.add_removable_edge(0, 1, benefit(-2));
        g.add_removable_edge(0, 2, benefit(-1));
        add("R8.1.2", std::move(g), 0, deg2);
    }
    {
        graph g = base8(benefit(5), benefit(4), benefit(6));
        g.add_removable_edge(0, 1, benefit(9));
        g.add_removable_edge(0, 2, benefit(2));
        add("R8.2.1", std::move(g), 0, deg2);
    }
    {
        graph g = base8(benefit(5), benefit(8), benefit(6));
        g.add_removable_edge(0, 1, benefit(9));
        g.add_removable_edge(0, 2, benefit(2));
        add("R8.2.2", std::move(g), 0, deg2);
    }
    {
        graph g = base8(benefit(-2), benefit(8), benefit(6));
        g.add_removable_edge(0, 1, benefit(3));
        g.add_removable_edge(0, 2, benefit(-4));
        add("R8.2.3", std::move(g), 0, deg2);
    }
    {
        graph g = base8(benefit(5), benefit(4), benefit(3));
        g.add_removable_edge(0, 1, benefit(6));
        g.add_removable_edge(0, 2, benefit(7));
        add("R8.3.1", std::move(g), 0, deg2);
    }
    {
        graph g = base8(benefit(5), benefit(8), benefit(3));
        g.add_removable_edge(0, 1, benefit(6));
        g.add_removable_edge(0, 2, benefit(7));
        add("R8.3.2", std::move(g), 0, deg2);
    }
    {
        graph g = base8(benefit(5), benefit(8), benefit(7));
        g.add_removable_edge(0, 1, benefit(6));
        g.add_removable_edge(0, 2, benefit(7));
        add("R8.3.3", std::move(g), 0, deg2);
    }
    {
        graph g = base8(benefit(-2), benefit(8), benefit(7));
        g.add_permanent_edge(0, 1);
        g.add_permanent_edge(0, 2);
        add("R8.3.4", std::move(g), 0, deg2);
    }

    // R9: degree-two vertex 0, neighbors 1,2 not permanently adjacent
    auto base9 = [](benefit wu, benefit wx, benefit wy) {
        graph g(3);
        g.set_profit(0, wu);
        g.set_profit(1, wx);
        g.set_profit(2, wy);
        return g;
    };
    {
        graph g = base9(benefit(10), benefit(7), benefit(6));
        g.add_removable_edge(0, 1, benefit(3));
        g.add_removable_edge(0, 2, benefit(2));
        add("R9.1.1", std::move(g), 0, deg2);
    }
    {
        graph g = base9(benefit(5), benefit(7), benefit(6));
        g.add_removable_edge(0, 1, benefit(4));
        g.add_removable_edge(0, 2, benefit(3));
        add("R9.1.2", std::move(g), 0, deg2);
    }
    {
        graph g = base9(benefit(-1), benefit(7), benefit(6));
        g.add_removable_edge(0, 1, benefit(-1));
        g.add_removable_edge(0, 2, benefit(-2));
        add("R9.1.3", std::move(g), 0, deg2);
    }
    {
        graph g = base9(benefit(4), benefit(7), benefit(6));
        g.add_removable_edge(0, 1, benefit(6));
        g.add_removable_edge(0, 2, benefit(-3));
        add("R9.2.1", std::move(g), 0, deg2);
    }
    {
        graph g = base9(benefit(4), benefit(7), benefit(6));
        g.add_removable_edge(0, 1, benefit(6));
        g.add_removable_edge(0, 2, benefit(1));
        add("R9.2.2", std::move(g), 0, deg2);
    }
    {
        graph g = base9(benefit(-5), benefit(7), benefit(6));
        g.add_removable_edge(0, 1, benefit(-2));
        g.add_removable_edge(0, 2, benefit(-8));
        add("R9.2.3", std::move(g), 0, deg2);
    }
    {
        graph g = base9(benefit(-3), benefit(7), benefit(6));
        g.add_removable_edge(0, 1, benefit(2));
        g.add_removable_edge(0, 2, benefit(-4));
        add("R9.2.4", std::move(g), 0, deg2);
    }
    {
        graph g = base9(benefit(2), benefit(7), benefit(6));
        g.add_removable_edge(0, 1, benefit(5));
        g.add_removable_edge(0, 2, benefit(4));
        add("R9.3.1", std::move(g), 0, deg2);
    }
    {
        graph g = base9(benefit(-1), benefit(7), benefit(6));
        g.add_removable_edge(0, 1, benefit(3));
        g.add_removable_edge(0, 2, benefit(2));
        add("R9.3.2", std::move(g), 0, deg2);
    }
    {
        graph g = base9(benefit(-4), benefit(7), benefit(6));
        g.add_removable_edge(0, 1, benefit(-2));
        g.add_removable_edge(0, 2, benefit(-3));
        add("R9.3.3", std::move(g), 0, deg2);
    }

    // R11: permanent triangle on {0,1,2}, vertex 3 a removable neighbor of
    // 0 so the rewiring paths get exercised
    auto base11 = [](benefit wu, benefit wx, benefit wy) {
        graph g(4);
        g.set_profit(0, wu);
        g.set_profit(1, wx);
        g.set_profit(2, wy);
        g.set_profit(3, benefit(2));
        g.add_permanent_edge(0, 1);
        g.add_permanent_edge(0, 2);
        g.add_permanent_edge(1, 2);
        g.add_removable_edge(0, 3, benefit(-1));
        return g;
    };
    add("R11.1", base11(benefit(9), benefit(4), benefit(2)), 0, lowp);
    add("R11.2", base11(benefit(3), benefit(4), benefit(2)), 0, lowp);
    add("R11.3", base11(benefit(1), benefit(4), benefit(3)), 0, lowp);

    return out;
}

// alpha(pre) must equal alpha(post) + offset_delta for a single applied
// event; full reduction of the same instance must agree with the oracle.
inline bool check_event_preserves_alpha(const graph& pre, const graph& post, benefit offset) {
    oracle_result a = brute_force_alpha(pre);
    oracle_result b = brute_force_alpha(post);
    return a.alpha == b.alpha + offset;
}

}  // namespace gis::testing
