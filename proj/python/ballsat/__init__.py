"""Deterministic 3-SAT via covering codes and ball search."""

from ._ballsat import (
    Formula,
    ParseError,
    SearchStats,
    brute_force_sat,
    evaluate,
    exact_code,
    generate,
    hamming_code,
    parse_dimacs,
    schoening_walk,
    selftest,
    solve,
    solve_ball,
    solve_exact_csp,
    verify_constants,
)

__all__ = [
    "Formula",
    "ParseError",
    "SearchStats",
    "brute_force_sat",
    "evaluate",
    "exact_code",
    "generate",
    "hamming_code",
    "parse_dimacs",
    "schoening_walk",
    "selftest",
    "solve",
    "solve_ball",
    "solve_exact_csp",
    "verify_constants",
]
