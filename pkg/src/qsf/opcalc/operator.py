"""Graded linear operators on the degree-truncated space and their (u, v) series.

Operators act on Schur coordinates.  A block ``(d, e)`` is the matrix sending
degree-d coordinates to degree-e coordinates (rows indexed by partitions of e,
columns by partitions of d).

Truncation bookkeeping works per block.  Every operator carries

* ``shift``: an interval ``[lo, hi]`` containing every degree shift ``e - d``
  the true (untruncated) operator can have; ``-inf``/``inf`` mark unbounded
  sides, and the empty interval marks the zero operator;
* ``valid``: the set of blocks whose stored value equals the true operator.
  Blocks outside the shift interval are known to vanish and are always valid.

Composition decides validity from these data alone: block ``(d, f)`` of
``A @ B`` is exact iff every intermediate degree that could contribute lies
within the truncation and is exact in both factors (or known zero in one).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .. import linalg
from ..qtcoeff import ONE, ZERO, QtRat, UVPoly, _coerce
from ..symfunc import SymFunc, partitions_of
from ..symfunc.partitions import partition_index

INF = math.inf
EMPTY = (INF, -INF)
FULL = (-INF, INF)


class WindowExhaustedError(RuntimeError):
    """Raised when a truncated computation leaves no exact block to work with."""


def _range_add(a, b):
    if a[0] > a[1] or b[0] > b[1]:
        return EMPTY
    return (a[0] + b[0], a[1] + b[1])


def _range_union(a, b):
    if a[0] > a[1]:
        return b
    if b[0] > b[1]:
        return a
    return (min(a[0], b[0]), max(a[1], b[1]))


def _fmt_bound(x):
    if x in (INF, -INF):
        return None
    return int(x)


def all_pairs(N: int) -> frozenset:
    return frozenset((d, e) for d in range(N + 1) for e in range(N + 1))


def _dims(d: int) -> int:
    return len(partitions_of(d))


@dataclass(frozen=True)
class DegreeWindow:
    """Degrees on which an operator (or a comparison) is exact.

    ``max_input_degree`` is the largest d such that every block with source
    degree at most d is exact; ``max_output_degree`` the analogue for targets.
    A value of -1 means nothing is exact.
    """

    N: int
    max_input_degree: int
    max_output_degree: int
    exact_blocks: int = 0
    total_blocks: int = 0

    def as_dict(self) -> dict:
        return {
            "N": self.N,
            "max_input_degree": self.max_input_degree,
            "max_output_degree": self.max_output_degree,
            "exact_blocks": self.exact_blocks,
            "total_blocks": self.total_blocks,
        }

    @property
    def empty(self) -> bool:
        return self.exact_blocks == 0

    @staticmethod
    def from_mask(N: int, valid) -> "DegreeWindow":
        max_in = -1
        for d in range(N + 1):
            if all((d, e) in valid for e in range(N + 1)):
                max_in = d
            else:
                break
        max_out = -1
        for e in range(N + 1):
            if all((d, e) in valid for d in range(N + 1)):
                max_out = e
            else:
                break
        return DegreeWindow(N, max_in, max_out, len(valid), (N + 1) ** 2)


class GradedOperator:
    __slots__ = ("N", "blocks", "valid", "shift")

    def __init__(self, N: int, blocks=None, valid=None, shift=FULL):
        self.N = N
        self.shift = shift
        lo, hi = shift
        pairs = all_pairs(N)
        if valid is None:
            valid = pairs
        outside = frozenset(p for p in pairs if not lo <= p[1] - p[0] <= hi)
        self.valid = frozenset(valid) | outside
        clean = {}
        for key, mat in (blocks or {}).items():
            if key not in self.valid or key in outside:
                continue
            if not linalg.is_zero_matrix(mat):
                clean[key] = mat
        self.blocks = clean

    @classmethod
    def _trusted(cls, N, blocks, valid, shift):
        obj = object.__new__(cls)
        obj.N, obj.blocks, obj.valid, obj.shift = N, blocks, valid, shift
        return obj

    # -- constructors -----------------------------------------------------
    @classmethod
    def identity(cls, N: int) -> "GradedOperator":
        return cls(N, {(d, d): linalg.identity(_dims(d)) for d in range(N + 1)}, shift=(0, 0))

    @classmethod
    def zero(cls, N: int) -> "GradedOperator":
        return cls._trusted(N, {}, all_pairs(N), EMPTY)

    @classmethod
    def from_images(cls, N: int, image, shift=FULL, valid=None) -> "GradedOperator":
        """Build from ``image(F)`` evaluated on every Schur basis element of degree <= N."""
        blocks: dict = {}
        for d in range(N + 1):
            cols = []
            for lam in partitions_of(d):
                out = image(SymFunc({lam: ONE}, "schur", N)).to_basis("schur")
                cols.append(out)
            targets = set()
            for out in cols:
                targets |= out.degrees()
            for e in targets:
                mat = tuple(
                    tuple(out.coefficient(mu) for out in cols) for mu in partitions_of(e)
                )
                blocks[(d, e)] = mat
        return cls(N, blocks, valid=valid, shift=shift)

    @classmethod
    def diagonal_in(cls, N: int, to_schur_by_degree, eigen_by_degree) -> "GradedOperator":
        """Operator diagonal in a basis given per degree by rows of ``to_schur``."""
        blocks = {}
        for d in range(N + 1):
            C, Cinv = to_schur_by_degree(d)
            eig = eigen_by_degree(d)
            scaled = tuple(tuple(x * eig[i] for x in row) for i, row in enumerate(C))
            blocks[(d, d)] = linalg.matmul(linalg.transpose(scaled), linalg.transpose(Cinv))
        return cls(N, blocks, shift=(0, 0))

    # -- structure --------------------------------------------------------
    def block(self, d: int, e: int):
        """The block (d -> e); zeros if absent.  Raises for a non-exact block."""
        if (d, e) not in self.valid:
            raise KeyError(f"block ({d} -> {e}) is not exact at truncation {self.N}")
        mat = self.blocks.get((d, e))
        if mat is None:
            return tuple(tuple(ZERO for _ in range(_dims(d))) for _ in range(_dims(e)))
        return mat

    def is_valid(self, d: int, e: int) -> bool:
        return (d, e) in self.valid

    @property
    def shift_profile(self) -> set:
        return {e - d for (d, e) in self.blocks}

    @property
    def shift_bounds(self):
        return (_fmt_bound(self.shift[0]), _fmt_bound(self.shift[1]))

    @property
    def max_raise(self):
        hi = self.shift[1]
        if hi == -INF:
            return 0
        return None if hi == INF else max(0, int(hi))

    @property
    def window(self) -> DegreeWindow:
        return DegreeWindow.from_mask(self.N, self.valid)

    def is_zero(self) -> bool:
        return not self.blocks

    def fully_exact(self) -> bool:
        return len(self.valid) == (self.N + 1) ** 2

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: "GradedOperator") -> "GradedOperator":
        self._check(other)
        blocks = dict(self.blocks)
        for key, mat in other.blocks.items():
            blocks[key] = linalg.matadd(blocks[key], mat) if key in blocks else mat
        valid = self.valid & other.valid
        return GradedOperator(self.N, blocks, valid, _range_union(self.shift, other.shift))

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "GradedOperator":
        c = _coerce(c)
        if c.is_zero():
            return GradedOperator._trusted(self.N, {}, all_pairs(self.N), EMPTY)
        blocks = {k: linalg.matscale(m, c) for k, m in self.blocks.items()}
        return GradedOperator._trusted(self.N, blocks, self.valid, self.shift)

    def _check(self, other):
        if not isinstance(other, GradedOperator):
            raise TypeError(f"expected GradedOperator, got {type(other).__name__}")
        if other.N != self.N:
            raise ValueError(f"truncation mismatch: {self.N} vs {other.N}")

    def _intermediate_ok(self, B: "GradedOperator", d: int, f: int) -> bool:
        A = self
        lo_e = max(0, d + B.shift[0], f - A.shift[1])
        hi_e = min(d + B.shift[1], f - A.shift[0])
        if lo_e > hi_e:
            return True
        if hi_e > self.N:
            return False
        for e in range(int(lo_e), int(hi_e) + 1):
            b_ok = (d, e) in B.valid
            a_ok = (e, f) in A.valid
            if (b_ok and (d, e) not in B.blocks) or (a_ok and (e, f) not in A.blocks):
                continue
            if not (a_ok and b_ok):
                return False
        return True

    def __matmul__(self, B: "GradedOperator") -> "GradedOperator":
        """``self @ B``: apply B first."""
        self._check(B)
        A = self
        shift = _range_add(A.shift, B.shift)
        if shift == EMPTY:
            return GradedOperator.zero(self.N)
        N = self.N
        valid = set()
        for d in range(N + 1):
            for f in range(N + 1):
                if A._intermediate_ok(B, d, f):
                    valid.add((d, f))
        by_source: dict = {}
        for (d, e), mb in B.blocks.items():
            by_source.setdefault(e, []).append((d, mb))
        blocks: dict = {}
        for (e, f), ma in A.blocks.items():
            for d, mb in by_source.get(e, ()):
                if (d, f) not in valid:
                    continue
                prod = linalg.matmul(ma, mb)
                blocks[(d, f)] = linalg.matadd(blocks[(d, f)], prod) if (d, f) in blocks else prod
        return GradedOperator(N, blocks, frozenset(valid), shift)

    def raw_compose(self, B: "GradedOperator") -> "GradedOperator":
        """Product of the truncated matrices, ignoring exactness (all blocks marked exact)."""
        self._check(B)
        by_source: dict = {}
        for (d, e), mb in B.blocks.items():
            by_source.setdefault(e, []).append((d, mb))
        blocks: dict = {}
        for (e, f), ma in self.blocks.items():
            for d, mb in by_source.get(e, ()):
                prod = linalg.matmul(ma, mb)
                blocks[(d, f)] = linalg.matadd(blocks[(d, f)], prod) if (d, f) in blocks else prod
        return GradedOperator(self.N, blocks)

    def restrict_shift(self, lo, hi) -> "GradedOperator":
        """Declare the true shift support to be within [lo, hi]."""
        return GradedOperator(self.N, self.blocks, self.valid, (lo, hi))

    def infer_support(self) -> "GradedOperator":
        """Narrow the shift interval to the shifts observed among exact nonzero blocks.

        This is an inference about the untruncated operator: blocks outside the
        observed range are declared zero.  It is sound whenever the true
        operator's support is an interval already witnessed inside the exact
        region, and it is cross-checked by recomputing at a larger truncation.
        """
        shifts = self.shift_profile
        if not shifts:
            if len(self.valid) == 0:
                raise WindowExhaustedError("no exact block to infer the support from")
            return GradedOperator.zero(self.N)
        return self.restrict_shift(min(shifts), max(shifts))

    def transpose(self) -> "GradedOperator":
        """Hall adjoint: Schur functions are orthonormal, so blocks transpose."""
        blocks = {(e, d): linalg.transpose(m) for (d, e), m in self.blocks.items()}
        valid = frozenset((e, d) for (d, e) in self.valid)
        lo, hi = self.shift
        shift = EMPTY if lo > hi else (-hi, -lo)
        return GradedOperator._trusted(self.N, blocks, valid, shift)

    def truncate_to(self, N: int) -> "GradedOperator":
        """View on degrees <= N (exactness is preserved block by block)."""
        if N > self.N:
            raise ValueError("cannot extend a truncation")
        blocks = {k: m for k, m in self.blocks.items() if k[0] <= N and k[1] <= N}
        valid = frozenset(k for k in self.valid if k[0] <= N and k[1] <= N)
        return GradedOperator._trusted(N, blocks, valid, self.shift)

    # -- application ------------------------------------------------------
    def apply(self, F: SymFunc) -> SymFunc:
        """Apply to F (converted to Schur); ``flagged`` is set if a non-exact block was used."""
        F = F.to_basis("schur")
        flagged = F.flagged
        out: dict = {}
        degrees = F.degrees()
        for (d, e), mat in self.blocks.items():
            if d not in degrees:
                continue
            vec = F.vector(d)
            for i, row in enumerate(mat):
                acc = None
                for a, x in zip(row, vec):
                    if a.is_zero() or x.is_zero():
                        continue
                    term = x * a
                    acc = term if acc is None else acc + term
                if acc is not None:
                    lam = partitions_of(e)[i]
                    out[lam] = out[lam] + acc if lam in out else acc
        for d in degrees:
            if any((d, e) not in self.valid for e in range(self.N + 1)):
                flagged = True
        return SymFunc({k: v for k, v in out.items()}, "schur", min(self.N, F.truncation), flagged)

    def __call__(self, F: SymFunc) -> SymFunc:
        return self.apply(F)

    def column(self, d: int, lam) -> SymFunc:
        """Image of s_lam restricted to exact blocks."""
        j = partition_index(d)[lam]
        coeffs = {}
        for (src, e), mat in self.blocks.items():
            if src != d:
                continue
            for i, mu in enumerate(partitions_of(e)):
                if not mat[i][j].is_zero():
                    coeffs[mu] = mat[i][j]
        return SymFunc(coeffs, "schur", self.N)

    def __eq__(self, other):
        if not isinstance(other, GradedOperator):
            return NotImplemented
        return self.N == other.N and not compare_operators(self, other)

    __hash__ = None

    def __repr__(self):
        lo, hi = self.shift_bounds
        return (
            f"GradedOperator(N={self.N}, shifts={sorted(self.shift_profile)}, bounds=({lo}, {hi}), "
            f"exact={len(self.valid)}/{(self.N + 1) ** 2})"
        )


@dataclass
class Mismatch:
    u_exp: int
    v_exp: int
    partition: str
    lhs: str
    rhs: str

    def as_dict(self) -> dict:
        return {
            "u_exp": self.u_exp,
            "v_exp": self.v_exp,
            "partition": self.partition,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


def compare_operators(A: GradedOperator, B: GradedOperator, i: int = 0, j: int = 0, stats=None):
    """Mismatches between A and B on blocks exact in both.

    One mismatch per (source basis vector) whose images differ; the images are
    restricted to the compared target degrees.
    """
    if A.N != B.N:
        raise ValueError("truncation mismatch")
    out = []
    N = A.N
    for d in range(N + 1):
        bad_cols: dict = {}
        compared_targets = []
        for e in range(N + 1):
            if (d, e) not in A.valid or (d, e) not in B.valid:
                if stats is not None:
                    stats["skipped"] += 1
                continue
            if stats is not None:
                stats["compared"] += 1
            compared_targets.append(e)
            ma, mb = A.blocks.get((d, e)), B.blocks.get((d, e))
            if ma is None and mb is None:
                continue
            rows = _dims(e)
            for jj in range(_dims(d)):
                for ii in range(rows):
                    a = ma[ii][jj] if ma is not None else ZERO
                    b = mb[ii][jj] if mb is not None else ZERO
                    if a != b:
                        bad_cols.setdefault(jj, True)
                        break
        for jj in sorted(bad_cols):
            lam = partitions_of(d)[jj]
            lhs = _restricted_column(A, d, jj, compared_targets)
            rhs = _restricted_column(B, d, jj, compared_targets)
            out.append(Mismatch(i, j, str(lam), lhs.format(), rhs.format()))
    return out


def _restricted_column(op: GradedOperator, d: int, jj: int, targets) -> SymFunc:
    coeffs = {}
    for e in targets:
        mat = op.blocks.get((d, e))
        if mat is None:
            continue
        for ii, mu in enumerate(partitions_of(e)):
            if not mat[ii][jj].is_zero():
                coeffs[mu] = mat[ii][jj]
    return SymFunc(coeffs, "schur", op.N)


@dataclass
class MismatchReport:
    mismatches: list = field(default_factory=list)
    compared_blocks: int = 0
    skipped_blocks: int = 0
    window: DegreeWindow | None = None

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def __bool__(self):
        return self.ok

    def extend(self, other: "MismatchReport"):
        self.mismatches.extend(other.mismatches)
        self.compared_blocks += other.compared_blocks
        self.skipped_blocks += other.skipped_blocks
        self.window = _min_window(self.window, other.window)


def _min_window(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return DegreeWindow(
        a.N,
        min(a.max_input_degree, b.max_input_degree),
        min(a.max_output_degree, b.max_output_degree),
        min(a.exact_blocks, b.exact_blocks),
        a.total_blocks,
    )


class OperatorSeries:
    """Truncated series sum_{i,j <= V} u^i v^j L_{i,j}; absent coefficients are exactly zero."""

    __slots__ = ("N", "V", "coeffs")

    def __init__(self, N: int, V: int, coeffs=None):
        self.N = N
        self.V = V
        self.coeffs = {}
        for (i, j), op in (coeffs or {}).items():
            if i > V or j > V or i < 0 or j < 0:
                continue
            if op.N != N:
                raise ValueError("coefficient truncation mismatch")
            if op.is_zero() and op.fully_exact():
                continue
            self.coeffs[(i, j)] = op

    @classmethod
    def identity(cls, N: int, V: int) -> "OperatorSeries":
        return cls(N, V, {(0, 0): GradedOperator.identity(N)})

    @classmethod
    def scalar(cls, c: UVPoly, N: int, V: int) -> "OperatorSeries":
        ident = GradedOperator.identity(N)
        return cls(N, V, {k: ident.scale(v) for k, v in c.terms.items()})

    def coefficient(self, i: int, j: int) -> GradedOperator:
        op = self.coeffs.get((i, j))
        return op if op is not None else GradedOperator.zero(self.N)

    def support(self) -> list:
        return sorted(k for k, op in self.coeffs.items() if not op.is_zero())

    @property
    def window(self) -> DegreeWindow:
        valid = all_pairs(self.N)
        for op in self.coeffs.values():
            valid = valid & op.valid
        return DegreeWindow.from_mask(self.N, valid)

    def _check(self, other):
        if not isinstance(other, OperatorSeries):
            raise TypeError(f"expected OperatorSeries, got {type(other).__name__}")
        if (self.N, self.V) != (other.N, other.V):
            raise ValueError(f"series truncation mismatch: {(self.N, self.V)} vs {(other.N, other.V)}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, op in other.coeffs.items():
            out[k] = out[k] + op if k in out else op
        return OperatorSeries(self.N, self.V, out)

    def __neg__(self):
        return OperatorSeries(self.N, self.V, {k: -op for k, op in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other: "OperatorSeries") -> "OperatorSeries":
        self._check(other)
        out: dict = {}
        V = self.V
        for (i1, j1), a in self.coeffs.items():
            for (i2, j2), b in other.coeffs.items():
                i, j = i1 + i2, j1 + j2
                if i > V or j > V:
                    continue
                prod = a @ b
                out[(i, j)] = out[(i, j)] + prod if (i, j) in out else prod
        return OperatorSeries(self.N, V, out)

    def times_scalar(self, c: UVPoly) -> "OperatorSeries":
        """Multiply by a scalar power series in u, v."""
        out: dict = {}
        V = self.V
        for (i1, j1), coeff in c.terms.items():
            for (i2, j2), op in self.coeffs.items():
                i, j = i1 + i2, j1 + j2
                if i > V or j > V:
                    continue
                term = op.scale(coeff)
                out[(i, j)] = out[(i, j)] + term if (i, j) in out else term
        return OperatorSeries(self.N, V, out)

    def map(self, fn) -> "OperatorSeries":
        return OperatorSeries(self.N, self.V, {k: fn(op) for k, op in self.coeffs.items()})

    def reindex(self, fn) -> "OperatorSeries":
        """Move coefficient (i, j) to fn(i, j), dropping exponents above V."""
        out: dict = {}
        for k, op in self.coeffs.items():
            nk = fn(*k)
            out[nk] = out[nk] + op if nk in out else op
        return OperatorSeries(self.N, self.V, out)

    def swap_uv(self) -> "OperatorSeries":
        return self.reindex(lambda i, j: (j, i))

    def inverse(self) -> "OperatorSeries":
        """Geometric-series inverse; the constant coefficient must be the identity."""
        ident = GradedOperator.identity(self.N)
        const = self.coefficient(0, 0)
        if compare_operators(const, ident) or not const.fully_exact():
            raise ValueError("series inverse needs the identity as constant coefficient")
        rest = OperatorSeries(self.N, self.V, {k: -op for k, op in self.coeffs.items() if k != (0, 0)})
        result = OperatorSeries.identity(self.N, self.V)
        power = OperatorSeries.identity(self.N, self.V)
        for _ in range(2 * self.V):
            power = power @ rest
            if not power.coeffs:
                break
            result = result + power
        return result

    def truncate_order(self, V: int) -> "OperatorSeries":
        return OperatorSeries(self.N, V, {k: op for k, op in self.coeffs.items() if k[0] <= V and k[1] <= V})

    def truncate_degree(self, N: int) -> "OperatorSeries":
        return OperatorSeries(N, self.V, {k: op.truncate_to(N) for k, op in self.coeffs.items()})

    def __repr__(self):
        return f"OperatorSeries(N={self.N}, V={self.V}, support={self.support()})"


def series_equal(A: OperatorSeries, B: OperatorSeries, cells=None) -> MismatchReport:
    """Compare every coefficient on the blocks exact in both series.

    ``cells`` optionally restricts the (i, j) exponents compared.
    """
    if A.N != B.N:
        raise ValueError("truncation mismatch")
    V = min(A.V, B.V)
    report = MismatchReport(window=None)
    keys = cells if cells is not None else sorted(
        k for k in set(A.coeffs) | set(B.coeffs) if k[0] <= V and k[1] <= V
    )
    for i, j in keys:
        a, b = A.coefficient(i, j), B.coefficient(i, j)
        stats = {"compared": 0, "skipped": 0}
        report.mismatches.extend(compare_operators(a, b, i, j, stats))
        report.compared_blocks += stats["compared"]
        report.skipped_blocks += stats["skipped"]
        report.window = _min_window(report.window, DegreeWindow.from_mask(A.N, a.valid & b.valid))
    if report.window is None:
        report.window = DegreeWindow.from_mask(A.N, all_pairs(A.N))
    return report
