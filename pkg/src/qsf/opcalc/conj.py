"""Conjugations of operators: S^{-1} and S by tau* tau, N^{+-1} by nabla.

With E(s) the multiplication by pExp[s X/M] and tau F = F[X+1]:

    S^{-1}(L) = (tau* tau) L (tau* tau)^{-1} = E(-1) (tau L tau^{-1}) E(+1)
    S(L)      = (tau* tau)^{-1} L (tau* tau) = tau^{-1} (E(+1) L E(-1)) tau

The inner conjugate has a shift range unbounded on one side, so its support is
inferred from the exact blocks before the outer, degree-raising conjugation;
the result's support is inferred the same way.  Blocks that cannot be reached
exactly stay marked non-exact.  On series, S^{-1} moves (i, j) to (i + j, j)
and N^{-1} moves (i, j) to (i, i + j); the forward maps S and N used for the
adjoint setup move (a, b) to (a, a + b) and (a + b, b) respectively.
"""
from __future__ import annotations

from functools import lru_cache

from .operator import GradedOperator, OperatorSeries, WindowExhaustedError
from .primitives import exp_op, tau_op


def _guarded(result: GradedOperator, what: str) -> GradedOperator:
    if not result.valid:
        raise WindowExhaustedError(f"{what}: no exact block survives the truncation")
    try:
        return result.infer_support()
    except WindowExhaustedError as exc:
        raise WindowExhaustedError(f"{what}: {exc}") from None


def s_inverse_op(L: GradedOperator) -> GradedOperator:
    N = L.N
    inner = _guarded(tau_op(N) @ L @ tau_op(N, inverse=True), "S^-1 inner conjugation")
    return _guarded(exp_op(N, -1) @ inner @ exp_op(N, +1), "S^-1")


def s_forward_op(L: GradedOperator) -> GradedOperator:
    N = L.N
    inner = _guarded(exp_op(N, +1) @ L @ exp_op(N, -1), "S inner conjugation")
    return _guarded(tau_op(N, inverse=True) @ inner @ tau_op(N), "S")


def s_inverse(L):
    """S^{-1} on an operator, or on a series (with the (i, j) -> (i + j, j) re-indexing)."""
    if isinstance(L, OperatorSeries):
        return L.map(s_inverse_op).reindex(lambda i, j: (i + j, j))
    return s_inverse_op(L)


def s_forward(L):
    if isinstance(L, OperatorSeries):
        return L.map(s_forward_op).reindex(lambda i, j: (i, i + j))
    return s_forward_op(L)


@lru_cache(maxsize=None)
def _nablas(N: int, signed: bool):
    from ..macdonald import nabla_op

    return nabla_op(N, signed=signed), nabla_op(N, inverse=True, signed=signed)


def n_conj_op(L: GradedOperator, inverse: bool = True, signed: bool = True) -> GradedOperator:
    nab, nab_inv = _nablas(L.N, signed)
    if inverse:
        return nab_inv @ L @ nab
    return nab @ L @ nab_inv


def n_conj(L, inverse: bool = True, signed: bool = True):
    """N^{-1}(L) = nabla^{-1} L nabla (default) or N(L) = nabla L nabla^{-1}.

    On series N^{-1} re-indexes (i, j) -> (i, i + j) and N re-indexes (a, b) -> (a + b, b).
    """
    if isinstance(L, OperatorSeries):
        out = L.map(lambda op: n_conj_op(op, inverse, signed))
        if inverse:
            return out.reindex(lambda i, j: (i, i + j))
        return out.reindex(lambda i, j: (i + j, j))
    return n_conj_op(L, inverse, signed)
