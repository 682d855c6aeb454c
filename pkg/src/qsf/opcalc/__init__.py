"""Graded operator calculus on the truncated symmetric-function space."""
from .conj import n_conj, s_forward, s_inverse
from .operator import (
    DegreeWindow,
    GradedOperator,
    Mismatch,
    MismatchReport,
    OperatorSeries,
    WindowExhaustedError,
    compare_operators,
    series_equal,
)
from .primitives import (
    adjoint,
    d_op,
    e_perp,
    exp_op,
    h_perp,
    mult_op,
    skew_op,
    star_adjoint,
    star_gram,
    tau_op,
    tau_series,
    tau_star_tau_op,
    tau_star_tau_truncated_inverse,
)

__all__ = [
    "DegreeWindow", "GradedOperator", "Mismatch", "MismatchReport", "OperatorSeries",
    "WindowExhaustedError", "adjoint", "compare_operators", "d_op", "e_perp", "exp_op", "h_perp",
    "mult_op", "n_conj", "s_forward", "s_inverse", "series_equal", "skew_op", "star_adjoint",
    "star_gram", "tau_op", "tau_series", "tau_star_tau_op", "tau_star_tau_truncated_inverse",
]
