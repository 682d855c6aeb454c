"""Change-of-basis matrices between the classical bases, pivoting through power sums.

Every matrix here has rational entries and is computed once per degree.  The
convention is column-major in the mathematical sense: ``to_powersum(b, d)[i][j]``
is the coefficient of ``p_{mu_i}`` in ``b_{lam_j}``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import flint

from ..qtcoeff import QtRat
from .partitions import Partition, partitions_of, partition_index, union, z_value

CLASSICAL = ("monomial", "elementary", "homogeneous", "powersum", "schur")
ALL_BASES = CLASSICAL + ("htilde",)
PREFIX = {
    "monomial": "m",
    "elementary": "e",
    "homogeneous": "h",
    "powersum": "p",
    "schur": "s",
    "htilde": "H",
}
_ALIASES = {
    "m": "monomial",
    "e": "elementary",
    "h": "homogeneous",
    "p": "powersum",
    "s": "schur",
    "H": "htilde",
    "ht": "htilde",
}


def basis_tag(name: str) -> str:
    tag = _ALIASES.get(name, name)
    if tag not in ALL_BASES:
        raise ValueError(f"unknown basis {name!r}")
    return tag


@lru_cache(maxsize=None)
def character(lam: tuple, mu: tuple) -> int:
    """chi^lam(mu) by the Murnaghan-Nakayama rule on beta-sets."""
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    length = len(lam)
    beta = [lam[i] + length - 1 - i for i in range(length)]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beads:
            continue
        between = sum(1 for x in beta if target < x < b)
        new = sorted((beads - {b}) | {target}, reverse=True)
        shape = tuple(x - (length - 1 - i) for i, x in enumerate(new))
        shape = tuple(p for p in shape if p > 0)
        total += (-1) ** between * character(shape, rest)
    return total


def _pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for la, ca in a.items():
        for lb, cb in b.items():
            key = union(la, lb)
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _h_in_p(n: int) -> dict:
    return {mu: Fraction(1, z_value(mu)) for mu in partitions_of(n)}


@lru_cache(maxsize=None)
def _e_in_p(n: int) -> dict:
    return {mu: Fraction((-1) ** (n - len(mu)), z_value(mu)) for mu in partitions_of(n)}


def _product_in_p(lam, single) -> dict:
    out = {Partition(()): Fraction(1)}
    for part in lam:
        out = _pmul(out, single(part))
    return out


def _matrix_from_columns(d: int, columns) -> flint.fmpq_mat:
    parts = partitions_of(d)
    idx = partition_index(d)
    n = len(parts)
    mat = flint.fmpq_mat(n, n)
    for j, col in enumerate(columns):
        for mu, c in col.items():
            c = Fraction(c)
            mat[idx[mu], j] = flint.fmpq(c.numerator, c.denominator)
    return mat


@lru_cache(maxsize=None)
def _to_p_fmpq(tag: str, d: int) -> flint.fmpq_mat:
    parts = partitions_of(d)
    if tag == "powersum":
        return _matrix_from_columns(d, ({lam: 1} for lam in parts))
    if tag == "homogeneous":
        return _matrix_from_columns(d, (_product_in_p(lam, _h_in_p) for lam in parts))
    if tag == "elementary":
        return _matrix_from_columns(d, (_product_in_p(lam, _e_in_p) for lam in parts))
    if tag == "schur":
        return _matrix_from_columns(
            d,
            ({mu: Fraction(character(lam, mu), z_value(mu)) for mu in parts} for lam in parts),
        )
    if tag == "monomial":
        # m is Hall-dual to h: <h_lam, m_kappa> = delta, so Pm = Z^{-1} Ph^{-T}
        ph = _to_p_fmpq("homogeneous", d)
        n = len(parts)
        zinv = flint.fmpq_mat(n, n)
        for i, mu in enumerate(parts):
            zinv[i, i] = flint.fmpq(1, z_value(mu))
        return zinv * ph.inv().transpose()
    raise ValueError(f"no classical change matrix for {tag!r}")


def _to_qt(mat: flint.fmpq_mat) -> tuple:
    rows = []
    for i in range(mat.nrows()):
        row = []
        for j in range(mat.ncols()):
            c = mat[i, j]
            row.append(QtRat(Fraction(int(c.p), int(c.q))))
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def change_matrix_fmpq(src: str, dst: str, d: int) -> flint.fmpq_mat:
    """Rational matrix taking ``src`` coordinates to ``dst`` coordinates in degree d."""
    if src == dst:
        n = len(partitions_of(d))
        mat = flint.fmpq_mat(n, n)
        for i in range(n):
            mat[i, i] = 1
        return mat
    return _to_p_fmpq(dst, d).inv() * _to_p_fmpq(src, d)


@lru_cache(maxsize=None)
def change_matrix(src: str, dst: str, d: int) -> tuple:
    """Same as :func:`change_matrix_fmpq` with QtRat entries (tuple of rows)."""
    return _to_qt(change_matrix_fmpq(src, dst, d))


def hall_gram_powersum(d: int) -> tuple:
    return tuple(z_value(mu) for mu in partitions_of(d))
