"""Concrete operators: skewing, multiplication, translations tau, D_n and adjoints."""
from __future__ import annotations

from functools import lru_cache

from .. import linalg
from ..qtcoeff import ONE, M, QtRat, _coerce
from ..symfunc import Alphabet, SymFunc, change_matrix, multiply, partitions_of, pexp, plethysm, z_value
from ..symfunc.core import e as e_func, h as h_func
from .operator import INF, GradedOperator, OperatorSeries, all_pairs


def _degree_range(F: SymFunc):
    degs = F.degrees()
    if not degs:
        return None
    return min(degs), max(degs)


def mult_op(F: SymFunc, N: int, unbounded: bool = False) -> GradedOperator:
    """Multiplication by F.  ``unbounded`` marks F as a truncated infinite series."""
    if F.truncation < N:
        raise ValueError(f"multiplier is truncated at {F.truncation} < {N}")
    rng = _degree_range(F)
    if rng is None:
        return GradedOperator.zero(N)
    lo, hi = rng
    if unbounded:
        hi = INF
    F = F.to_basis("powersum")
    return GradedOperator.from_images(N, lambda G: multiply(G, F), shift=(lo, hi))


def skew_op(F: SymFunc, N: int) -> GradedOperator:
    """F^perp, the Hall adjoint of multiplication by a polynomial F."""
    return mult_op(F, N).transpose()


def _one(N):
    return SymFunc.one(N)


@lru_cache(maxsize=None)
def h_perp(k: int, N: int) -> GradedOperator:
    return skew_op(h_func(k, N=N) if k else _one(N), N)


@lru_cache(maxsize=None)
def e_perp(k: int, N: int) -> GradedOperator:
    return skew_op(e_func(k, N=N) if k else _one(N), N)


def tau_series(N: int, V: int, inverse: bool = False) -> OperatorSeries:
    """tau_u F = F[X+u]: coefficient of u^k is h_k^perp; the inverse uses (-1)^k e_k^perp."""
    coeffs = {}
    for k in range(V + 1):
        if inverse:
            op = e_perp(k, N)
            coeffs[(k, 0)] = op if k % 2 == 0 else -op
        else:
            coeffs[(k, 0)] = h_perp(k, N)
    return OperatorSeries(N, V, coeffs)


def _sum_ops(ops, N, shift):
    blocks: dict = {}
    for op in ops:
        for key, mat in op.blocks.items():
            blocks[key] = linalg.matadd(blocks[key], mat) if key in blocks else mat
    return GradedOperator(N, blocks, all_pairs(N), shift)


@lru_cache(maxsize=None)
def tau_op(N: int, inverse: bool = False) -> GradedOperator:
    """tau F = F[X+1] (or its inverse F[X-1]); exact on every block of the truncation."""
    if inverse:
        ops = [e_perp(k, N) if k % 2 == 0 else -e_perp(k, N) for k in range(N + 1)]
    else:
        ops = [h_perp(k, N) for k in range(N + 1)]
    return _sum_ops(ops, N, (-INF, 0))


@lru_cache(maxsize=None)
def pexp_x_over_m(N: int, sign: int) -> SymFunc:
    """pExp[sign * X/M] truncated at degree N."""
    series = pexp(Alphabet.X(sign * (ONE / M)), truncation=N, z_window=0, order=0)
    return series.coefficient(0, "schur")


@lru_cache(maxsize=None)
def exp_op(N: int, sign: int) -> GradedOperator:
    """Multiplication by pExp[sign X/M]; sign=-1 is tau*."""
    return mult_op(pexp_x_over_m(N, sign), N, unbounded=True)


@lru_cache(maxsize=None)
def tau_star_tau_op(N: int) -> GradedOperator:
    """F -> pExp[-X/M] F[X+1], exact on the truncation."""
    return exp_op(N, -1) @ tau_op(N)


@lru_cache(maxsize=None)
def tau_star_tau_truncated_inverse(N: int) -> GradedOperator:
    """Inverse of the truncated matrix of tau* tau.

    Both truncated factors are unitriangular in degree, so the inverse is the
    product of the truncated inverses.  It is not the truncation of the true
    inverse (which would need all degrees), hence ``raw_compose``.
    """
    return tau_op(N, inverse=True).raw_compose(exp_op(N, +1))


def d_image(F: SymFunc, n: int, N: int) -> SymFunc:
    """Coefficient of z^n in F[X + M/z] pExp[-Xz], truncated at degree N."""
    win = 2 * N + abs(n) + 1
    shifted = plethysm(F, Alphabet.X() + Alphabet.unit(M, z=-1), z_window=win, order=0)
    kernel = pexp(Alphabet.X(-1, z=1), truncation=N, z_window=win, order=0, cutoff=2 * N + abs(n) + 1)
    return (shifted * kernel).coefficient(n, "schur")


@lru_cache(maxsize=None)
def d_op(n: int, N: int) -> GradedOperator:
    """D_n, homogeneous of degree n."""
    return GradedOperator.from_images(N, lambda F: d_image(F, n, N), shift=(n, n))


# -- adjoints ---------------------------------------------------------------------

def hall_adjoint(L: GradedOperator) -> GradedOperator:
    return L.transpose()


@lru_cache(maxsize=None)
def star_gram(d: int):
    """Gram matrix of (F, G)_* = <F[-MX], G> on Schur coordinates, and its inverse.

    On power sums it is diagonal: z_mu * prod_i -(1 - q^mu_i)(1 - t^mu_i).
    """
    to_p = change_matrix("schur", "powersum", d)
    diag = []
    for mu in partitions_of(d):
        w = QtRat(z_value(mu))
        for k in mu:
            w = w * -M.twist(k)
        diag.append(w)
    scaled = tuple(tuple(x * diag[i] for x in row) for i, row in enumerate(to_p))
    G = linalg.matmul(linalg.transpose(to_p), scaled)
    return G, linalg.inverse(G)


def star_adjoint(L: GradedOperator) -> GradedOperator:
    """L* with (L F, G)_* = (F, L* G)_*, block (e -> d) = G_d^{-1} A^T G_e."""
    blocks = {}
    for (d, e), A in L.blocks.items():
        Gd_inv = star_gram(d)[1]
        Ge = star_gram(e)[0]
        blocks[(e, d)] = linalg.matmul(Gd_inv, linalg.matmul(linalg.transpose(A), Ge))
    valid = frozenset((e, d) for (d, e) in L.valid)
    lo, hi = L.shift
    shift = (INF, -INF) if lo > hi else (-hi, -lo)
    return GradedOperator._trusted(L.N, blocks, valid, shift)


def adjoint(L, pairing: str = "hall"):
    """Adjoint of an operator or (coefficientwise) of a series."""
    fn = {"hall": hall_adjoint, "star": star_adjoint}.get(pairing)
    if fn is None:
        raise ValueError(f"unknown pairing {pairing!r}")
    if isinstance(L, OperatorSeries):
        return L.map(fn)
    return fn(L)


def scalar_op(c, N: int) -> GradedOperator:
    return GradedOperator.identity(N).scale(_coerce(c))
