"""Krein-space linear algebra: indefinite adjoints, projections, indefinite
least squares and generalized inverses.

Matrices are numpy arrays (converted to complex). Solver functions return a
dict with ``feasible``, ``reason``, ``conditions``, ``residuals`` and, when
feasible, ``solution``, ``perturbation_basis`` and ``value``.
"""

from ._core import (
    KreinError,
    Space,
    classify,
    companion,
    generalized_inverse,
    indefinite_inverse,
    is_krein_positive,
    moore_penrose,
    normal_projection,
    selfadjoint_projection,
    solve_imax,
    solve_immso,
    solve_ims,
    solve_min_ims_norm,
    verify_immso,
)

__all__ = [
    "KreinError",
    "Space",
    "classify",
    "companion",
    "generalized_inverse",
    "indefinite_inverse",
    "is_krein_positive",
    "moore_penrose",
    "normal_projection",
    "selfadjoint_projection",
    "solve_imax",
    "solve_immso",
    "solve_ims",
    "solve_min_ims_norm",
    "verify_immso",
]
