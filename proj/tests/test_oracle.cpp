#include <doctest.h>

#include "helpers.hpp"

using namespace gis;
using namespace gis::testing;

TEST_CASE("oracle on tiny instances") {
    graph g(1);
    g.set_profit(0, benefit(5));
    oracle_result r = brute_force_alpha(g);
    CHECK(r.alpha.raw() == 5);
    CHECK(r.witness == std::vector<vertex_id>{0});

    graph h(2);
    h.set_profit(0, benefit(3));
    h.set_profit(1, benefit(4));
    h.add_permanent_edge(0, 1);
    CHECK(brute_force_alpha(h).alpha.raw() == 4);
}

TEST_CASE("figure-one fragment attains the red-set value") {
    graph g = fig1_instance();
    oracle_result r = brute_force_alpha(g);
    CHECK(r.alpha.raw() >= 120);
    CHECK(net_benefit(g, std::vector<vertex_id>{0, 1, 2}).raw() == 120);
    CHECK(is_generalized_independent(g, r.witness));
    CHECK(net_benefit(g, r.witness) == r.alpha);
}

TEST_CASE("witness always verifies and no set beats alpha on small corpora") {
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
        graph g = random_instance(seed, 10);
        oracle_result r = brute_force_alpha(g, 26, true);
        CHECK(is_generalized_independent(g, r.witness));
        CHECK(net_benefit(g, r.witness) == r.alpha);
        CHECK(r.optimal_count >= 1);
    }
}

TEST_CASE("constrained oracle") {
    graph g = random_instance(7);
    oracle_result full = brute_force_alpha(g);
    CHECK(constrained_alpha(g, std::vector<vertex_id>{}).alpha == full.alpha);
    CHECK(constrained_alpha(g, full.witness).alpha == full.alpha);

    graph h(2);
    h.set_profit(0, benefit(3));
    h.set_profit(1, benefit(4));
    h.add_permanent_edge(0, 1);
    CHECK_THROWS_AS((void)constrained_alpha(h, std::vector<vertex_id>{0, 1}), invalid_input);
}

TEST_CASE("alpha is invariant under zero-penalty edge deletion") {
    for (std::uint64_t seed = 200; seed < 220; ++seed) {
        graph g = random_instance(seed);
        // plant a zero-penalty edge if possible
        vertex_id a = no_vertex, b = no_vertex;
        for (vertex_id u = 0; u < g.vertex_count() && a == no_vertex; ++u)
            for (vertex_id v = u + 1; v < g.vertex_count(); ++v)
                if (!g.has_permanent_edge(u, v) && !g.has_removable_edge(u, v)) {
                    a = u;
                    b = v;
                    break;
                }
        if (a == no_vertex) continue;
        graph with = g;
        with.add_removable_edge(a, b, benefit(0));
        CHECK(brute_force_alpha(with).alpha == brute_force_alpha(g).alpha);
    }
}

TEST_CASE("size cap is enforced") {
    graph g(30);
    for (vertex_id v = 0; v < 30; ++v) g.set_profit(v, benefit(1));
    CHECK_THROWS_AS((void)brute_force_alpha(g, 26), invalid_input);

    graph h(18);
    for (vertex_id v = 0; v < 18; ++v) h.set_profit(v, benefit(1));
    CHECK(brute_force_alpha(h, 18).alpha.raw() == 18);
}
