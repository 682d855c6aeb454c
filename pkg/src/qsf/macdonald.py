"""Modified Macdonald polynomials and the operators diagonal in their basis.

H~_lam is the unique symmetric function with

* H~_lam[X(1-q)] in the span of s_mu with mu >= lam  (dominance),
* H~_lam[X(1-t)] in the span of s_mu with mu >= lam',
* <H~_lam, s_(d)> = 1,

so that H~_(2) = s_2 + q s_11.  Each degree is solved as an exact linear system
over Q(q,t) and cached (in memory and, optionally, on disk).
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from pathlib import Path

from . import cache as _cache
from . import linalg
from .opcalc.operator import GradedOperator, OperatorSeries
from .qtcoeff import ONE, ZERO, M, Q, T, QtRat, qt_poly
from .symfunc import Partition, SymFunc, change_matrix, dominance_leq, partitions_of
from .symfunc.core import e as e_func, h as h_func


@dataclass(frozen=True)
class CellStats:
    partition: Partition
    b_poly: QtRat
    n_stat: int
    nprime_stat: int


def cell_stats(lam) -> CellStats:
    """B_lam = sum over cells q^c t^r, and n(lam), n'(lam) (0-indexed rows and columns)."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    terms: dict = {}
    n = nprime = 0
    for c, r in lam.cells():
        terms[(c, r)] = terms.get((c, r), 0) + 1
        n += r
        nprime += c
    return CellStats(lam, qt_poly(terms), n, nprime)


@dataclass(frozen=True)
class MacdonaldTable:
    degree: int
    to_schur: tuple
    from_schur: tuple

    def row(self, lam) -> SymFunc:
        """H~_lam expanded in Schur functions."""
        i = partitions_of(self.degree).index(Partition(lam))
        coeffs = dict(zip(partitions_of(self.degree), self.to_schur[i]))
        return SymFunc(coeffs, "schur", max(self.degree, 1))


# -- solver -------------------------------------------------------------------

def _plethysm_matrix(d: int, scalar: QtRat):
    """Schur-coordinate matrix of F -> F[X * scalar] on degree d."""
    to_p = change_matrix("schur", "powersum", d)
    from_p = change_matrix("powersum", "schur", d)
    parts = partitions_of(d)
    diag = []
    for mu in parts:
        f = ONE
        for k in mu:
            f = f * scalar.twist(k)
        diag.append(f)
    scaled = tuple(tuple(x * diag[i] for x in row) for i, row in enumerate(to_p))
    return linalg.matmul(from_p, scaled)


def solve_htilde(d: int) -> tuple:
    """Rows of the degree-d table in Schur coordinates, from the axioms."""
    parts = partitions_of(d)
    n = len(parts)
    if d == 0:
        return ((ONE,),)
    A_q = _plethysm_matrix(d, ONE - Q)
    A_t = _plethysm_matrix(d, ONE - T)
    top = parts.index(Partition((d,)))
    rows = []
    for lam in parts:
        lam_c = lam.conjugate()
        eqs, rhs = [], []
        for i, mu in enumerate(parts):
            if not dominance_leq(lam, mu):
                eqs.append(list(A_q[i]))
                rhs.append(ZERO)
            if not dominance_leq(lam_c, mu):
                eqs.append(list(A_t[i]))
                rhs.append(ZERO)
        norm = [ZERO] * n
        norm[top] = ONE
        eqs.append(norm)
        rhs.append(ONE)
        rows.append(tuple(linalg.solve(eqs, rhs)))
    return tuple(rows)


# -- table cache ----------------------------------------------------------------

_TABLES: dict = {}
_LOCK = threading.Lock()
_DISK = {"dir": None, "enabled": True}


def configure_cache(cache_dir=None, enabled: bool = True):
    """Set the on-disk cache directory (None: environment default) and clear memory."""
    with _LOCK:
        _DISK["dir"] = None if cache_dir is None else Path(cache_dir)
        _DISK["enabled"] = enabled
        _TABLES.clear()


def cache_dir() -> Path:
    return _DISK["dir"] if _DISK["dir"] is not None else _cache.default_cache_dir()


def htilde_table(d: int, use_disk: bool | None = None) -> MacdonaldTable:
    """The degree-d table, computed once and then served from memory or disk."""
    table = _TABLES.get(d)
    if table is not None:
        return table
    disk = _DISK["enabled"] if use_disk is None else use_disk
    to_schur = None
    if disk:
        to_schur = _cache.read(cache_dir(), d)
    if to_schur is None:
        to_schur = solve_htilde(d)
        if disk:
            _cache.write_atomic(_cache.cache_path(cache_dir(), d), _cache.serialize(d, to_schur))
    table = MacdonaldTable(d, to_schur, linalg.inverse(to_schur))
    with _LOCK:
        _TABLES.setdefault(d, table)
    return _TABLES[d]


def htilde(lam, N: int | None = None) -> SymFunc:
    """H~_lam in the Schur basis."""
    lam = Partition(lam)
    row = htilde_table(lam.size).row(lam)
    return SymFunc(row.coeffs, "schur", lam.size if N is None else N)


def convert_htilde(F: SymFunc, target) -> SymFunc:
    """Change of basis to or from the H~ basis (pivoting through Schur)."""
    if F.basis == "htilde":
        vectors = {}
        for d in sorted(F.degrees()):
            tab = htilde_table(d)
            vec = F.vector(d)
            vectors[d] = [
                _dot((tab.to_schur[i][j] for i in range(len(vec))), vec) for j in range(len(vec))
            ]
        schur = SymFunc.from_vectors(vectors, "schur", F.truncation, F.flagged)
        return schur.to_basis(target)
    schur = F.to_basis("schur")
    vectors = {}
    for d in sorted(schur.degrees()):
        tab = htilde_table(d)
        vec = schur.vector(d)
        vectors[d] = [
            _dot((tab.from_schur[j][i] for j in range(len(vec))), vec) for i in range(len(vec))
        ]
    return SymFunc.from_vectors(vectors, "htilde", F.truncation, F.flagged)


def _dot(col, vec):
    acc = ZERO
    for a, b in zip(col, vec):
        if not a.is_zero() and not b.is_zero():
            acc = b * a + acc
    return acc


# -- eigenoperators -------------------------------------------------------------

def scalar_plethysm(F: SymFunc, alphabet: QtRat) -> QtRat:
    """F[A] for a scalar alphabet A, using p_n[A] = A(q^n, t^n)."""
    acc = ZERO
    for mu, c in F.to_basis("powersum").coeffs.items():
        term = c
        for k in mu:
            term = term * alphabet.twist(k)
        acc = acc + term
    return acc


def _table_pair(d):
    tab = htilde_table(d)
    return tab.to_schur, tab.from_schur


def diagonal_operator(N: int, eigenvalue) -> GradedOperator:
    """Operator with H~_lam -> eigenvalue(lam) H~_lam on degrees <= N."""
    return GradedOperator.diagonal_in(
        N, _table_pair, lambda d: [eigenvalue(lam) for lam in partitions_of(d)]
    )


def delta_eigenvalue(F: SymFunc, lam, prime: bool = False) -> QtRat:
    b = cell_stats(lam).b_poly
    if prime:
        b = b - ONE / M
    return scalar_plethysm(F, b)


def delta_op(F: SymFunc, prime: bool = False, N: int | None = None) -> GradedOperator:
    """Delta_F (eigenvalue F[B_lam]) or Delta'_F (eigenvalue F[B_lam - 1/M])."""
    N = F.truncation if N is None else N
    return diagonal_operator(N, lambda lam: delta_eigenvalue(F, lam, prime))


def nabla_eigenvalue(lam, signed: bool = True) -> QtRat:
    st = cell_stats(lam)
    val = Q ** st.nprime_stat * T ** st.n_stat
    if signed and Partition(lam).size % 2:
        val = -val
    return val


def nabla_op(N: int, inverse: bool = False, signed: bool = True) -> GradedOperator:
    """The signed nabla, (-1)^|lam| q^n'(lam) t^n(lam) on H~_lam; ``signed=False`` drops the sign."""
    if inverse:
        return diagonal_operator(N, lambda lam: nabla_eigenvalue(lam, signed).inverse())
    return diagonal_operator(N, lambda lam: nabla_eigenvalue(lam, signed))


def delta_series(kind: str, N: int, V: int) -> OperatorSeries:
    """Series in v: ``delta`` = sum (-v)^n Delta_{e_n}, ``delta_prime`` its primed analogue,
    ``delta_inverse`` = sum v^n Delta_{h_n}."""
    coeffs = {}
    for n in range(V + 1):
        if kind == "delta":
            op = delta_op(e_func(n, N=N) if n else SymFunc.one(N), False, N)
            op = op if n % 2 == 0 else -op
        elif kind == "delta_prime":
            op = delta_op(e_func(n, N=N) if n else SymFunc.one(N), True, N)
            op = op if n % 2 == 0 else -op
        elif kind == "delta_inverse":
            op = delta_op(h_func(n, N=N) if n else SymFunc.one(N), False, N)
        else:
            raise ValueError(f"unknown delta series {kind!r}")
        coeffs[(0, n)] = op
    return OperatorSeries(N, V, coeffs)


__all__ = [
    "CellStats", "MacdonaldTable", "cell_stats", "configure_cache", "convert_htilde", "delta_eigenvalue",
    "delta_op", "delta_series", "diagonal_operator", "htilde", "htilde_table", "nabla_eigenvalue",
    "nabla_op", "scalar_plethysm", "solve_htilde",
]
