"""Dense exact linear algebra over Q(q,t) for the small per-degree blocks."""
from __future__ import annotations

from .qtcoeff import ONE, ZERO, QtRat


class SingularMatrixError(ArithmeticError):
    pass


def matmul(A, B):
    """Product of row-major QtRat matrices, skipping structural zeros."""
    if not A or not B:
        return tuple(tuple() for _ in A)
    inner = len(B)
    cols = len(B[0])
    # transpose-free: accumulate row by row over nonzero entries of A
    b_nz = [[(j, x) for j, x in enumerate(row) if not x.is_zero()] for row in B]
    out = []
    for row in A:
        acc = [None] * cols
        for k in range(inner):
            a = row[k]
            if a.is_zero():
                continue
            for j, b in b_nz[k]:
                prod = a * b
                cur = acc[j]
                acc[j] = prod if cur is None else cur + prod
        out.append(tuple(ZERO if x is None else x for x in acc))
    return tuple(out)


def matadd(A, B):
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def matscale(A, c):
    return tuple(tuple(a * c for a in row) for row in A)


def transpose(A):
    return tuple(zip(*A)) if A else A


def identity(n: int):
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def is_zero_matrix(A) -> bool:
    return all(x.is_zero() for row in A for x in row)


def _pick_pivot(rows, col, start):
    best = None
    best_size = None
    for r in range(start, len(rows)):
        x = rows[r][col]
        if x.is_zero():
            continue
        size = x.total_size()
        if best is None or size < best_size:
            best, best_size = r, size
            if size <= 2:
                break
    return best


def row_reduce(rows, ncols: int):
    """Gauss-Jordan elimination in place; returns the list of pivot columns."""
    pivots = []
    r = 0
    for col in range(ncols):
        piv = _pick_pivot(rows, col, r)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [x * inv if not x.is_zero() else x for x in rows[r]]
        prow = rows[r]
        nz = [(j, x) for j, x in enumerate(prow) if not x.is_zero()]
        for i in range(len(rows)):
            if i == r:
                continue
            f = rows[i][col]
            if f.is_zero():
                continue
            row = rows[i]
            for j, x in nz:
                row[j] = row[j] - f * x
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return pivots


def solve(equations, rhs):
    """Unique solution of ``equations @ x = rhs``; raises if not unique or inconsistent."""
    n = len(equations[0])
    rows = [list(eq) + [b] for eq, b in zip(equations, rhs)]
    pivots = row_reduce(rows, n + 1)
    if n in pivots:
        raise SingularMatrixError("inconsistent linear system")
    if len(pivots) != n:
        raise SingularMatrixError(f"linear system has rank {len(pivots)} < {n}")
    return [rows[i][n] for i in range(n)]


def inverse(A):
    n = len(A)
    rows = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(A)]
    pivots = row_reduce(rows, n)
    if len(pivots) != n:
        raise SingularMatrixError("matrix is singular")
    return tuple(tuple(rows[i][n:]) for i in range(n))


def to_qt_matrix(rows):
    return tuple(tuple(x if isinstance(x, QtRat) else QtRat(x) for x in row) for row in rows)
