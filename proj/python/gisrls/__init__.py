"""Generalized independent set toolkit: reduction rules, exact oracle, and
reduction-driven local search over a C++ core."""

from _gisrls import (  # noqa: F401
    Graph,
    KernelResult,
    brute_force_alpha,
    complete_reduction,
    generate,
    is_generalized_independent,
    net_benefit,
    rls_solve,
    tilde_w,
    verify_solution,
    w_plus,
)

__all__ = [
    "Graph",
    "KernelResult",
    "brute_force_alpha",
    "complete_reduction",
    "generate",
    "is_generalized_independent",
    "net_benefit",
    "rls_solve",
    "tilde_w",
    "verify_solution",
    "w_plus",
]
