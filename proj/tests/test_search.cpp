#include <doctest.h>

#include "gis/search.hpp"
#include "helpers.hpp"

using namespace gis;
using namespace gis::testing;

namespace {

solution empty_solution() { return solution{{}, benefit(0)}; }

}  // namespace

TEST_CASE("gains start at the profits and track additions exactly") {
    graph g = random_instance(11);
    search_state st(g, empty_solution());
    for (vertex_id v : g.alive_vertices()) CHECK(st.gain(v) == g.profit(v));

    // pick any addable vertex and confirm nb moves by its gain
    std::vector<vertex_id> m1, m2;
    st.build_moves(m1, m2);
    REQUIRE_FALSE(m1.empty());
    vertex_id v = m1.front();
    benefit before = st.nb(), gain = st.gain(v);
    st.apply_add(v);
    CHECK(st.nb() == before + gain);
}

TEST_CASE("gains equal a from-scratch recomputation after random adds") {
    rng r(5);
    for (std::uint64_t seed = 20; seed < 30; ++seed) {
        graph g = random_instance(seed);
        search_state st(g, empty_solution());
        std::vector<vertex_id> m1, m2;
        for (int step = 0; step < 50; ++step) {
            st.build_moves(m1, m2);
            if (m1.empty()) break;
            st.apply_add(m1[r.below(m1.size())]);
            CHECK(is_generalized_independent(g, st.snapshot().members));
        }
        auto fresh = st.recompute_gains();
        for (vertex_id v : g.alive_vertices()) CHECK(st.gain(v) == fresh[v]);
        CHECK(st.nb() == net_benefit(g, st.snapshot().members));
    }
}

TEST_CASE("swap of equal twins leaves the value unchanged") {
    graph g(2);
    g.set_profit(0, benefit(5));
    g.set_profit(1, benefit(5));
    g.add_permanent_edge(0, 1);
    search_state st(g, empty_solution());
    st.apply_add(0);
    benefit before = st.nb();
    rng r(1);
    st.advance_iteration();
    st.apply_swap(0, 1, 1, r);
    CHECK(st.nb() == before);
    CHECK(st.in_solution(1));
    CHECK_FALSE(st.in_solution(0));
    CHECK(is_generalized_independent(g, st.snapshot().members));
    CHECK(st.tabu(0));
}

TEST_CASE("a swapped-out vertex stays out of the swap pool while tabu") {
    graph g(3);
    g.set_profit(0, benefit(5));
    g.set_profit(1, benefit(5));
    g.set_profit(2, benefit(1));
    g.add_permanent_edge(0, 1);
    search_state st(g, empty_solution());
    st.apply_add(0);
    rng r(2);
    st.advance_iteration();
    st.apply_swap(0, 1, 2, r);
    std::vector<vertex_id> m1, m2;
    bool excluded_while_tabu = true;
    for (int it = 0; it < 16; ++it) {
        st.advance_iteration();
        st.build_moves(m1, m2);
        bool in_m2 = std::find(m2.begin(), m2.end(), 0) != m2.end();
        if (st.tabu(0) && in_m2) excluded_while_tabu = false;
    }
    CHECK(excluded_while_tabu);
    CHECK_FALSE(st.tabu(0));  // tenure is bounded by 10 + |M_2|
}

TEST_CASE("gain bookkeeping survives long random add/swap/remove mixes") {
    for (std::uint64_t seed = 40; seed < 50; ++seed) {
        graph g = random_instance(seed);
        search_state st(g, empty_solution());
        rng r(seed * 7 + 1);
        std::vector<vertex_id> m1, m2;
        for (int step = 0; step < 1000; ++step) {
            st.advance_iteration();
            st.build_moves(m1, m2);
            std::uint64_t pick = r.below(3);
            if (pick == 0 && !m1.empty()) {
                st.apply_add(m1[r.below(m1.size())]);
            } else if (pick == 1 && !m2.empty()) {
                vertex_id v = m2[r.below(m2.size())];
                st.apply_swap(st.unique_conflict(v), v, m2.size(), r);
            } else if (st.size() > 0) {
                auto members = st.snapshot().members;
                st.apply_remove(members[r.below(members.size())]);
            }
        }
        auto fresh = st.recompute_gains();
        for (vertex_id v : g.alive_vertices()) CHECK(st.gain(v) == fresh[v]);
        auto snap = st.snapshot();
        CHECK(st.nb() == net_benefit(g, snap.members));
        CHECK(is_generalized_independent(g, snap.members));
    }
}

TEST_CASE("reduce move adds exactly the qualifying residual vertices") {
    graph g(1);
    g.set_profit(0, benefit(4));
    search_state st(g, empty_solution());
    CHECK(st.apply_reduce_move() == 1);
    CHECK(st.in_solution(0));

    graph h(1);
    h.set_profit(0, benefit(-1));
    search_state sh(h, empty_solution());
    CHECK(sh.apply_reduce_move() == 0);
    CHECK_FALSE(sh.in_solution(0));
}

TEST_CASE("after the reduce move no residual vertex satisfies the inclusion bound") {
    for (std::uint64_t seed = 60; seed < 80; ++seed) {
        graph g = random_instance(seed);
        search_state st(g, empty_solution());
        st.apply_reduce_move();
        for (vertex_id v : g.alive_vertices()) {
            if (st.in_solution(v)) continue;
            bool blocked = false;
            g.for_permanent(v, [&](vertex_id x) { blocked = blocked || st.in_solution(x); });
            if (blocked) continue;
            // residual neighborhood bound must now exceed the gain
            benefit bound(0);
            auto residual = [&](vertex_id x) {
                if (st.in_solution(x)) return false;
                bool b2 = false;
                g.for_permanent(x, [&](vertex_id y) { b2 = b2 || st.in_solution(y); });
                return !b2;
            };
            auto tilde_res = [&](vertex_id x) {
                benefit t = st.gain(x);
                g.for_removable(x, [&](vertex_id y, benefit p) {
                    if (residual(y)) t += pos_part(-p);
                });
                return t;
            };
            g.for_permanent(v, [&](vertex_id x) {
                if (residual(x)) bound += pos_part(tilde_res(x));
            });
            g.for_removable(v, [&](vertex_id x, benefit) {
                if (residual(x)) bound += pos_part(tilde_res(x));
            });
            CHECK(st.gain(v) < bound);
        }
    }
}

TEST_CASE("random peeling returns a maximal feasible solution, deterministically") {
    gen_params p;
    p.n = 20;
    p.edge_prob = 0.25;
    p.removable_frac = 0.5;
    p.seed = 77;
    graph g = generate_instance(p);

    rng r1(123), r2(123);
    solution a = random_peeling(g, {}, r1);
    solution b = random_peeling(g, {}, r2);
    CHECK(a.members == b.members);
    CHECK(a.net_benefit == b.net_benefit);

    CHECK(is_generalized_independent(g, a.members));
    CHECK(net_benefit(g, a.members) == a.net_benefit);

    // maximality: no vertex outside with no permanent conflict and a
    // strictly positive marginal gain
    std::vector<std::uint8_t> in(g.vertex_count(), 0);
    for (vertex_id v : a.members) in[v] = 1;
    for (vertex_id v : g.alive_vertices()) {
        if (in[v]) continue;
        bool conflict = false;
        benefit gain = g.profit(v);
        g.for_permanent(v, [&](vertex_id x) { conflict = conflict || in[x]; });
        g.for_removable(v, [&](vertex_id x, benefit pe) {
            if (in[x]) gain -= pe;
        });
        if (!conflict) CHECK(gain.raw() <= 0);
    }
}

TEST_CASE("peeling on the empty graph yields the empty solution") {
    graph g;
    rng r(1);
    solution s = random_peeling(g, {}, r);
    CHECK(s.members.empty());
    CHECK(s.net_benefit.zero());
}

TEST_CASE("neighborhood search never loses ground and is deterministic") {
    for (std::uint64_t seed = 85; seed < 95; ++seed) {
        graph g = random_instance(seed, 16);
        rng r0(seed);
        solution start = random_peeling(g, {}, r0);
        rng r1(seed + 1), r2(seed + 1);
        solution s1 = neighborhood_search(g, start, 50, 0.2, r1);
        solution s2 = neighborhood_search(g, start, 50, 0.2, r2);
        CHECK(s1.net_benefit >= start.net_benefit);
        CHECK(s1.members == s2.members);
        CHECK(s1.net_benefit == s2.net_benefit);
        CHECK(is_generalized_independent(g, s1.members));
        CHECK(net_benefit(g, s1.members) == s1.net_benefit);
    }
}

TEST_CASE("search keeps an already optimal input") {
    graph g = random_instance(17, 12);
    oracle_result o = brute_force_alpha(g);
    solution opt = make_solution(g, o.witness);
    rng r(3);
    solution out = neighborhood_search(g, opt, 30, 0.2, r);
    CHECK(out.net_benefit == o.alpha);
}

TEST_CASE("rls_solve on the empty graph") {
    graph g;
    solve_params p;
    p.cutoff_seconds = 1.0;
    p.trials = 2;
    solve_result res = rls_solve(g, p);
    CHECK(res.sol.members.empty());
    CHECK(res.sol.net_benefit.zero());
    CHECK(res.stats.proven_optimal);
}

TEST_CASE("fully reduced instances come back proven optimal") {
    graph g = random_forest(3, 12);
    solve_params p;
    p.cutoff_seconds = 5.0;
    p.trials = 3;
    p.seed = 4;
    solve_result res = rls_solve(g, p);
    CHECK(res.stats.proven_optimal);
    CHECK(res.stats.kernel_size == 0);
    CHECK(res.sol.net_benefit == res.stats.offset);
    CHECK(res.sol.net_benefit == brute_force_alpha(g).alpha);
}

TEST_CASE("rls_solve finds small-instance optima and verifies") {
    int hits = 0, total = 0;
    for (std::uint64_t seed = 150; seed < 170; ++seed) {
        graph g = random_instance(seed, 16);
        solve_params p;
        p.cutoff_seconds = 1.0;
        p.trials = 4;
        p.seed = seed;
        p.max_outer_iters = 20;
        solve_result res = rls_solve(g, p);
        CHECK(is_generalized_independent(g, res.sol.members));
        CHECK(net_benefit(g, res.sol.members) == res.sol.net_benefit);
        oracle_result o = brute_force_alpha(g);
        CHECK(res.sol.net_benefit <= o.alpha);
        ++total;
        if (res.sol.net_benefit == o.alpha) ++hits;
    }
    CHECK(hits >= total * 9 / 10);
}

TEST_CASE("rls_solve rejects bad parameters") {
    graph g = random_instance(1);
    solve_params p;
    p.cutoff_seconds = 0;
    CHECK_THROWS_AS((void)rls_solve(g, p), invalid_input);
    p.cutoff_seconds = 1;
    p.epsilon = 1.5;
    CHECK_THROWS_AS((void)rls_solve(g, p), invalid_input);
}

TEST_CASE("solver trajectories are reproducible per seed") {
    graph g = random_instance(31, 16);
    solve_params p;
    p.cutoff_seconds = 30.0;
    p.trials = 3;
    p.seed = 9;
    p.max_outer_iters = 5;
    p.threads = 2;
    solve_result a = rls_solve(g, p);
    solve_result b = rls_solve(g, p);
    CHECK(a.sol.members == b.sol.members);
    CHECK(a.sol.net_benefit == b.sol.net_benefit);
    CHECK(a.stats.proven_optimal == b.stats.proven_optimal);
}
