"""Exact HOMFLY, Dubrovnik and Alexander polynomials of closed braids and their cables."""

from ._knotpoly import (
    Braid,
    BudgetExceeded,
    KnotpolyError,
    Laurent,
    ParseError,
    Pattern,
    Poly,
    Report,
    alexander,
    alexander_from_homfly,
    cable,
    cable_pattern,
    dubrovnik,
    dubrovnik_from_kauffman_f,
    h_invariants,
    homfly,
    kauffman_f_from_d,
    moments,
    reconstruct,
    run_experiment,
    verify_moment_determination,
    verify_trivial_cables,
)

__all__ = [
    "Braid",
    "BudgetExceeded",
    "KnotpolyError",
    "Laurent",
    "ParseError",
    "Pattern",
    "Poly",
    "Report",
    "alexander",
    "alexander_from_homfly",
    "cable",
    "cable_pattern",
    "dubrovnik",
    "dubrovnik_from_kauffman_f",
    "h_invariants",
    "homfly",
    "kauffman_f_from_d",
    "moments",
    "reconstruct",
    "run_experiment",
    "verify_moment_determination",
    "verify_trivial_cables",
]
