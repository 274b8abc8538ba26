"""Smoke tests for the python bindings: the main operations agree with each
other on small instances."""

import gisrls


def small_instance(seed=3):
    return gisrls.generate(n=12, edge_prob=0.3, removable_frac=0.6,
                           profit_min=-10, profit_max=10,
                           penalty_min=-5, penalty_max=8, seed=seed)


def test_generate_roundtrip():
    g = small_instance()
    text = g.to_string()
    h = gisrls.Graph.from_string(text)
    assert h.to_string() == text
    assert h.n == g.n
    assert h.permanent_edges == g.permanent_edges
    assert h.removable_edges == g.removable_edges


def test_reduction_matches_oracle():
    for seed in range(1, 15):
        g = small_instance(seed)
        alpha, witness = gisrls.brute_force_alpha(g)
        assert gisrls.is_generalized_independent(g, witness)
        assert gisrls.net_benefit(g, witness) == alpha

        kr = gisrls.complete_reduction(g)
        k_alpha, k_witness = gisrls.brute_force_alpha(kr.kernel)
        assert alpha == k_alpha + kr.offset

        members, nb = kr.lift(k_witness, g)
        assert nb == alpha
        assert gisrls.is_generalized_independent(g, members)


def test_solver_agrees_and_verifies():
    g = small_instance(21)
    alpha, _ = gisrls.brute_force_alpha(g)
    members, nb, stats = gisrls.rls_solve(g, cutoff_seconds=2.0, trials=4,
                                          seed=7, max_outer_iters=15)
    assert nb <= alpha
    verdict = gisrls.verify_solution(g, members, nb)
    assert verdict["ok"]
    if stats["proven_optimal"]:
        assert nb == stats["offset"] == alpha


def test_core_formulas():
    g = gisrls.Graph(3, 1)
    g.set_profit(0, 20)
    g.set_profit(1, 60)
    g.set_profit(2, 50)
    g.add_removable_edge(1, 2, 10)
    assert gisrls.net_benefit(g, [0, 1, 2]) == 120
    assert gisrls.tilde_w(g, 0) == 20
    assert gisrls.w_plus(g, [1, 2]) == 110
    assert gisrls.is_generalized_independent(g, [0, 1, 2])
