"""The operators T_{m,n} for both setups and exact verification of their identities.

Setup 1: R_{k,0} = h_k^perp, R_{0,k} = (-1)^k Delta'_{e_k}, so T_{1,0} = tau_u and
T_{0,1} = Delta'_v.  Higher slopes come from the Euclid word of (m, n): S^{-1}
when m >= n > 0, N^{-1} when n > m > 0.

Setup 2: R_{k,0} = (-1)^k Delta'_{e_k}, R_{0,k} = multiplication by (-1)^k e_k[X/M].
It is the star-adjoint of setup 1 with u and v exchanged; star-adjoints turn
S^{-1} into S and N^{-1} into N, so the setup-2 word uses the forward maps:
S when n >= m > 0 (re-indexing (a, b) -> (a, a + b)), N when m > n > 0
(re-indexing (a, b) -> (a + b, b)).
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from .macdonald import delta_op, delta_series
from .opcalc import (
    GradedOperator,
    OperatorSeries,
    WindowExhaustedError,
    compare_operators,
    h_perp,
    mult_op,
    n_conj,
    s_forward,
    s_inverse,
    series_equal,
    skew_op,
    star_adjoint,
    tau_series,
)
from .opcalc.operator import DegreeWindow, MismatchReport
from .qtcoeff import ONE, M, UVPoly
from .symfunc import Alphabet, SymFunc, pexp, plethysm
from .symfunc.core import e as e_func


@dataclass(frozen=True)
class Variant:
    """Conventions; flipping either one is a fault-injection experiment."""

    signed_nabla: bool = True
    signed_delta: bool = True


DEFAULT = Variant()


@dataclass(frozen=True)
class Setup:
    tag: int

    def __post_init__(self):
        if self.tag not in (1, 2):
            raise ValueError(f"setup must be 1 or 2, got {self.tag}")


@dataclass
class TBuildTrace:
    target: tuple
    base: tuple
    word: list
    window: DegreeWindow

    def replay(self) -> tuple:
        pair = self.base
        for move in self.word:
            pair = advance(move, pair)
        return pair


def advance(move: str, pair) -> tuple:
    """Slope reached by one move: S^-1 and N map (a, b) to (a + b, b); N^-1 and S to (a, a + b)."""
    a, b = pair
    if move in ("S^-1", "N"):
        return a + b, b
    if move in ("N^-1", "S"):
        return a, a + b
    raise ValueError(f"unknown move {move!r}")


@dataclass
class CheckReport:
    name: str
    params: dict
    window: dict
    status: str
    mismatches: list = field(default_factory=list)
    millis: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "window": self.window,
            "status": self.status,
            "mismatches": [m.as_dict() if hasattr(m, "as_dict") else dict(m) for m in self.mismatches],
            "millis": self.millis,
        }


class _Collector:
    """Accumulates sub-comparisons into one report."""

    def __init__(self, name, params):
        self.name = name
        self.params = dict(params)
        self.report = MismatchReport()
        self.subchecks = []
        self.start = time.perf_counter()

    def add(self, label: str, rep: MismatchReport):
        self.report.extend(rep)
        self.subchecks.append(
            {"label": label, "compared_blocks": rep.compared_blocks, "mismatches": len(rep.mismatches)}
        )

    def ops(self, label, a: GradedOperator, b: GradedOperator, i=0, j=0):
        stats = {"compared": 0, "skipped": 0}
        mism = compare_operators(a, b, i, j, stats)
        if stats["compared"] == 0:
            raise WindowExhaustedError(f"{label}: no block is exact in both operators")
        rep = MismatchReport(mism, stats["compared"], stats["skipped"], DegreeWindow.from_mask(a.N, a.valid & b.valid))
        self.add(label, rep)

    def series(self, label, A: OperatorSeries, B: OperatorSeries, cells=None):
        rep = series_equal(A, B, cells)
        if rep.compared_blocks == 0:
            raise WindowExhaustedError(f"{label}: no block is exact in both series")
        self.add(label, rep)

    def finish(self) -> CheckReport:
        params = dict(self.params)
        params["subchecks"] = self.subchecks
        window = self.report.window.as_dict() if self.report.window else None
        return CheckReport(
            self.name,
            params,
            window,
            "pass" if self.report.ok else "fail",
            list(self.report.mismatches),
            int((time.perf_counter() - self.start) * 1000),
        )


# -- generators ---------------------------------------------------------------------

@lru_cache(maxsize=None)
def _delta_prime_series(N: int, V: int, signed: bool) -> OperatorSeries:
    ser = delta_series("delta_prime", N, V)
    if signed:
        return ser
    return OperatorSeries(N, V, {k: (op if k[1] % 2 == 0 else -op) for k, op in ser.coeffs.items()})


@lru_cache(maxsize=None)
def e_over_m(k: int, N: int) -> SymFunc:
    """e_k[X/M] truncated at degree N."""
    if k == 0:
        return SymFunc.one(N)
    return plethysm(e_func(k, N=N), Alphabet.X(ONE / M)).coefficient(0, "schur")


@lru_cache(maxsize=None)
def _mult_series(N: int, V: int) -> OperatorSeries:
    """sum_k v^k (-1)^k e_k[X/M] as multiplication operators."""
    coeffs = {}
    for k in range(V + 1):
        op = mult_op(e_over_m(k, N), N)
        coeffs[(0, k)] = op if k % 2 == 0 else -op
    return OperatorSeries(N, V, coeffs)


def base_series(pair, setup: Setup, N: int, V: int, variant: Variant = DEFAULT) -> OperatorSeries:
    if setup.tag == 1:
        if pair == (1, 0):
            return tau_series(N, V)
        if pair == (0, 1):
            return _delta_prime_series(N, V, variant.signed_delta)
    else:
        if pair == (1, 0):
            return _delta_prime_series(N, V, variant.signed_delta).swap_uv()
        if pair == (0, 1):
            return _mult_series(N, V)
    raise ValueError(f"{pair} is not a base pair")


def euclid_word(m: int, n: int, setup: Setup):
    """(base pair, moves from the base up to (m, n))."""
    if m < 0 or n < 0 or (m, n) == (0, 0) or gcd(m, n) != 1:
        raise ValueError(f"T_{{m,n}} needs coprime nonnegative (m, n), got {(m, n)}")
    moves = []
    a, b = m, n
    while (a, b) not in ((1, 0), (0, 1)):
        if setup.tag == 1:
            if a >= b > 0:
                moves.append("S^-1")
                a -= b
            else:
                moves.append("N^-1")
                b -= a
        else:
            if b >= a > 0:
                moves.append("S")
                b -= a
            else:
                moves.append("N")
                a -= b
    return (a, b), list(reversed(moves))


def _apply_move(move, ser, variant):
    if move == "S^-1":
        return s_inverse(ser)
    if move == "N^-1":
        return n_conj(ser, inverse=True, signed=variant.signed_nabla)
    if move == "S":
        return s_forward(ser)
    if move == "N":
        return n_conj(ser, inverse=False, signed=variant.signed_nabla)
    raise ValueError(move)


_BUILDS: dict = {}


def build_T(m: int, n: int, setup: Setup, N: int = 6, V: int = 5, variant: Variant = DEFAULT):
    """T_{m,n} and the trace of its construction."""
    if isinstance(setup, int):
        setup = Setup(setup)
    key = (m, n, setup.tag, N, V, variant)
    hit = _BUILDS.get(key)
    if hit is not None:
        return hit
    base, word = euclid_word(m, n, setup)
    ser = base_series(base, setup, N, V, variant)
    a, b = base
    for move in word:
        try:
            ser = _apply_move(move, ser, variant)
        except WindowExhaustedError as exc:
            raise WindowExhaustedError(f"building T_{{{m},{n}}}: step {move} from {(a, b)}: {exc}") from None
        a, b = advance(move, (a, b))
    trace = TBuildTrace((m, n), base, word, ser.window)
    _BUILDS[key] = (ser, trace)
    return ser, trace


def clear_build_cache():
    _BUILDS.clear()


# -- checks -----------------------------------------------------------------------

def _glue_base(col: _Collector, setup: Setup, N, V, variant):
    """The two constructions of the first non-base series must agree."""
    T10 = base_series((1, 0), setup, N, V, variant)
    T01 = base_series((0, 1), setup, N, V, variant)
    if setup.tag == 1:
        col.series("T11: N^-1(T10) = S^-1(T01)",
                   n_conj(T10, True, variant.signed_nabla), s_inverse(T01))
    else:
        col.series("T11: S(T10) = N(T01)",
                   s_forward(T10), n_conj(T01, False, variant.signed_nabla))


def _touches_11(m, n, setup):
    if (m, n) == (1, 1):
        return True
    if (m, n) in ((1, 0), (0, 1)):
        return False
    base, word = euclid_word(m, n, setup)
    return len(word) > 0


def _five_term_into(col: _Collector, m, n, m2, n2, setup: Setup, N, V, variant):
    if m * n2 - m2 * n != 1:
        raise ValueError(f"five-term relation needs m n' - m' n = 1, got {m * n2 - m2 * n}")
    A, _ = build_T(m, n, setup, N, V, variant)
    B, _ = build_T(m2, n2, setup, N, V, variant)
    C, trace = build_T(m + m2, n + n2, setup, N, V, variant)
    col.series(f"five-term ({m},{n}),({m2},{n2}) setup {setup.tag}", A @ B, B @ C @ A)
    if any(_touches_11(a, b, setup) for a, b in ((m, n), (m2, n2), (m + m2, n + n2))):
        _glue_base(col, setup, N, V, variant)
    return trace


def verify_five_term(m, n, m2, n2, setup, N=6, V=5, variant: Variant = DEFAULT) -> CheckReport:
    """T_{m,n} T_{m',n'} = T_{m',n'} T_{m+m',n+n'} T_{m,n} for m n' - m' n = 1.

    Whenever T_{1,1} is involved, its two constructions from the base pair are
    compared as well, since the relation at the base pair is their equality.
    """
    if isinstance(setup, int):
        setup = Setup(setup)
    col = _Collector("five-term", {"pairs": f"{m},{n}:{m2},{n2}", "setup": setup.tag, "N": N, "V": V})
    if variant != DEFAULT:
        col.params["variant"] = {"signed_nabla": variant.signed_nabla, "signed_delta": variant.signed_delta}
    trace = _five_term_into(col, m, n, m2, n2, setup, N, V, variant)
    col.params["word"] = " ".join(trace.word)
    return col.finish()


def _conj6_sides(k: int, l: int, N: int):
    from .macdonald import nabla_op
    from .symfunc.core import h as h_func

    nab, nab_inv = nabla_op(N), nabla_op(N, inverse=True)
    lhs = nab_inv @ h_perp(k, N) @ nab @ h_perp(l, N)
    rhs = GradedOperator.zero(N)
    for r in range(k + 1):
        dh = delta_op(h_func(r, N=N) if r else SymFunc.one(N), False, N)
        de = delta_op(e_func(k - r, N=N) if k - r else SymFunc.one(N), False, N)
        term = dh @ h_perp(k + l, N) @ de
        rhs = rhs + (term if (k - r) % 2 == 0 else -term)
    return lhs, rhs


def verify_conj6(k: int, l: int, N: int = 6) -> CheckReport:
    """nabla^{-1} h_k^perp nabla h_l^perp = sum_r (-1)^{k-r} Delta_{h_r} h_{k+l}^perp Delta_{e_{k-r}}."""
    col = _Collector("conj6", {"k": k, "l": l, "N": N})
    lhs, rhs = _conj6_sides(k, l, N)
    col.ops(f"k={k},l={l}", lhs, rhs)
    return col.finish()


def verify_conj6_all(max_sum: int = 5, N: int = 6) -> CheckReport:
    col = _Collector("conj6", {"max_k_plus_l": max_sum, "N": N})
    for k in range(max_sum + 1):
        for l in range(max_sum + 1 - k):
            lhs, rhs = _conj6_sides(k, l, N)
            col.ops(f"k={k},l={l}", lhs, rhs)
    return col.finish()


@lru_cache(maxsize=None)
def w_series(N: int, V: int) -> OperatorSeries:
    """sum W_{i,j} u^i v^j = Delta_v^{-1} tau_u Delta_v tau_u^{-1}."""
    Dv = delta_series("delta", N, V)
    Dvi = delta_series("delta_inverse", N, V)
    return Dvi @ tau_series(N, V) @ Dv @ tau_series(N, V, inverse=True)


def verify_generating_identity(N: int = 6, V: int = 5) -> CheckReport:
    """Delta_v^{-1} tau_u Delta_v tau_u^{-1} = nabla^{-1} tau_{uv} nabla = S^{-1}(Delta'_{uv}),
    and T_{0,1}^{-1} T_{1,0} T_{0,1} T_{1,0}^{-1} = N^{-1}(T_{1,0})."""
    col = _Collector("generating", {"N": N, "V": V})
    left = w_series(N, V)
    middle = n_conj(tau_series(N, V))
    right = s_inverse(delta_series("delta_prime", N, V))
    col.series("left = middle", left, middle)
    col.series("middle = right", middle, right)
    T10, T01 = tau_series(N, V), delta_series("delta_prime", N, V)
    col.series("T01^-1 T10 T01 T10^-1 = N^-1(T10)", T01.inverse() @ T10 @ T01 @ tau_series(N, V, inverse=True), middle)
    return col.finish()


def verify_w_props(N: int = 6, V: int = 5, off_max: int = 4, diag_max: int = 3, literal: bool = False) -> CheckReport:
    """Off-diagonal W_{i,j} vanish; W_{i,i} = nabla^{-1} h_i^perp nabla = (-1)^i S^{-1}(Delta'_{e_i}).

    ``literal=True`` drops the (-1)^i in the second formula.
    """
    col = _Collector("w-props", {"N": N, "V": V, "off_max": off_max, "diag_max": diag_max, "literal": literal})
    W = w_series(N, V)
    zero = GradedOperator.zero(N)
    for i in range(min(off_max, V) + 1):
        for j in range(min(off_max, V) + 1):
            if i != j:
                col.ops(f"W[{i},{j}] = 0", W.coefficient(i, j), zero, i, j)
    col.ops("W[0,0] = id", W.coefficient(0, 0), GradedOperator.identity(N), 0, 0)
    for i in range(1, diag_max + 1):
        col.ops(f"W[{i},{i}] = nabla^-1 h_{i}^perp nabla", W.coefficient(i, i), n_conj(h_perp(i, N)), i, i)
        sd = s_inverse(delta_op(e_func(i, N=N), True, N))
        if not literal and i % 2:
            sd = -sd
        col.ops(f"W[{i},{i}] = S^-1(Delta'_e{i})", W.coefficient(i, i), sd, i, i)
    return col.finish()


def verify_polynomiality(F: SymFunc, N: int = 6, V: int = 5, label: str | None = None) -> CheckReport:
    """Delta_v^{-1} F^perp Delta_v and tau_u Delta_F tau_u^{-1} are polynomials of degree <= d
    with top coefficients nabla^{-1} F^perp nabla and S^{-1}(Delta'_F)."""
    d = F.homogeneous_degree()
    if d is None:
        raise ValueError("polynomiality needs a homogeneous F")
    col = _Collector("polynomiality", {"F": label or F.format(), "d": d, "N": N, "V": V})
    Fp = OperatorSeries(N, V, {(0, 0): skew_op(F, N)})
    first = delta_series("delta_inverse", N, V) @ Fp @ delta_series("delta", N, V)
    zero = GradedOperator.zero(N)
    for j in range(d + 1, V + 1):
        col.ops(f"v^{j} coefficient vanishes", first.coefficient(0, j), zero, 0, j)
    col.ops("v^d coefficient = nabla^-1 F^perp nabla", first.coefficient(0, d), n_conj(skew_op(F, N)), 0, d)
    DF = OperatorSeries(N, V, {(0, 0): delta_op(F, False, N)})
    second = tau_series(N, V) @ DF @ tau_series(N, V, inverse=True)
    for i in range(d + 1, V + 1):
        col.ops(f"u^{i} coefficient vanishes", second.coefficient(i, 0), zero, i, 0)
    col.ops("u^d coefficient = S^-1(Delta'_F)", second.coefficient(d, 0), s_inverse(delta_op(F, True, N)), d, 0)
    return col.finish()


def pexp_u_over_m(V: int) -> UVPoly:
    """pExp[u/M] as a truncated scalar series."""
    ser = pexp(Alphabet.unit(ONE / M, u=1), truncation=0, z_window=0, order=V)
    c = ser.coefficient(0, "powersum").coefficient(())
    return c if isinstance(c, UVPoly) else UVPoly.const(c, V)


def verify_glue_and_commutators(kmax: int = 4, N: int = 6, V: int = 5) -> CheckReport:
    """N^{-1}(T01) = T01, S^{-1}(T10) = pExp[u/M] T10, [R_{k,0}, R_{0,1}] = R_{1,1} R_{k-1,0}."""
    setup = Setup(1)
    col = _Collector("glue", {"kmax": kmax, "N": N, "V": V})
    T10 = base_series((1, 0), setup, N, V)
    T01 = base_series((0, 1), setup, N, V)
    col.series("N^-1(T01) = T01", n_conj(T01), T01)
    col.series("S^-1(T10) = pExp[u/M] T10", s_inverse(T10), T10.times_scalar(pexp_u_over_m(V)))
    T11, _ = build_T(1, 1, setup, N, V)
    R11 = T11.coefficient(1, 1)
    R01 = T01.coefficient(0, 1)
    for k in range(1, kmax + 1):
        Rk0 = T10.coefficient(k, 0) if k <= V else h_perp(k, N)
        Rk1 = T10.coefficient(k - 1, 0) if k - 1 <= V else h_perp(k - 1, N)
        col.ops(f"[R_{k},0, R_0,1] = R_1,1 R_{k - 1},0", Rk0 @ R01 - R01 @ Rk0, R11 @ Rk1, k, 0)
    return col.finish()


def verify_setup2_duality(N: int = 6, V: int = 5, pairs=((1, 0), (0, 1), (1, 1), (2, 1), (1, 2))) -> CheckReport:
    """Setup-2 coefficients are star-adjoints of setup-1 coefficients with u, v exchanged."""
    col = _Collector("setup2-duality", {"N": N, "V": V, "pairs": [f"{a},{b}" for a, b in pairs]})
    s1, s2 = Setup(1), Setup(2)
    for k in range(V + 1):
        target = mult_op(e_over_m(k, N), N)
        target = target if k % 2 == 0 else -target
        col.ops(f"(h_{k}^perp)^* = (-1)^{k} e_{k}[X/M]", star_adjoint(h_perp(k, N)), target, k, 0)
    closed = pexp(Alphabet.X(-(ONE / M), v=1), truncation=N, z_window=0, order=V)
    closed_series = _closed_form_series(closed, N, V)
    col.series("T01 (setup 2) = pExp[-vX/M]", base_series((0, 1), s2, N, V), closed_series)
    for a, b in pairs:
        T2, _ = build_T(a, b, s2, N, V)
        T1, _ = build_T(b, a, s1, N, V)
        col.series(f"T{a},{b} (setup 2) = adjoint of T{b},{a} (setup 1)", T2, T1.map(star_adjoint).swap_uv())
    _five_term_into(col, 1, 0, 0, 1, s2, N, V, DEFAULT)
    return col.finish()


def _closed_form_series(ser, N, V) -> OperatorSeries:
    """Multiplication operators from a ZGradedSym whose coefficients are series in v."""
    comp = ser.coefficient(0, "schur")
    by_exp: dict = {}
    for lam, c in comp.coeffs.items():
        terms = c.terms if isinstance(c, UVPoly) else {(0, 0): c}
        for key, val in terms.items():
            by_exp.setdefault(key, {})[lam] = val
    coeffs = {key: mult_op(SymFunc(f, "schur", N), N) for key, f in by_exp.items()}
    return OperatorSeries(N, V, coeffs)


def verify_s_inverse_calculus(N: int = 6, V: int = 5) -> CheckReport:
    """S^{-1}(D_n) = -D_{n-1}, tau_u D_n tau_u^{-1} = D_n - u D_{n-1}, S^{-1}(D_a D_b) = D_{a-1} D_{b-1}."""
    from .opcalc import d_op

    col = _Collector("s-inverse", {"N": N, "V": V})
    for n in range(-2, 4):
        col.ops(f"S^-1(D_{n}) = -D_{n - 1}", s_inverse(d_op(n, N)), -d_op(n - 1, N))
    for n in range(-2, 4):
        D = OperatorSeries(N, V, {(0, 0): d_op(n, N)})
        lhs = tau_series(N, V) @ D @ tau_series(N, V, inverse=True)
        rhs = OperatorSeries(N, V, {(0, 0): d_op(n, N), (1, 0): -d_op(n - 1, N)})
        col.series(f"tau_u D_{n} tau_u^-1 = D_{n} - u D_{n - 1}", lhs, rhs)
    for a in range(3):
        for b in range(3):
            col.ops(
                f"S^-1(D_{a} D_{b}) = D_{a - 1} D_{b - 1}",
                s_inverse(d_op(a, N) @ d_op(b, N)),
                d_op(a - 1, N) @ d_op(b - 1, N),
            )
    return col.finish()


def verify_truncation_soundness(N: int = 6, V: int = 5, conj6_max: int = 5) -> CheckReport:
    """Recompute the conj6, five-term and W identities at (N+1, V+1) and compare with (N, V).

    Every block exact at both truncations must carry the same value, and the
    identities must still hold at the larger truncation.
    """
    col = _Collector("soundness", {"N": N, "V": V, "N_big": N + 1, "V_big": V + 1})
    big_n, big_v = N + 1, V + 1

    def shrink_op(op):
        return op.truncate_to(N)

    def shrink(ser):
        return ser.truncate_degree(N).truncate_order(V)

    for k in range(conj6_max + 1):
        for l in range(conj6_max + 1 - k):
            lhs, rhs = _conj6_sides(k, l, N)
            lhs_b, rhs_b = _conj6_sides(k, l, big_n)
            col.ops(f"conj6 k={k},l={l} at N+1", lhs_b, rhs_b)
            col.ops(f"conj6 k={k},l={l} lhs N vs N+1", lhs, shrink_op(lhs_b))
            col.ops(f"conj6 k={k},l={l} rhs N vs N+1", rhs, shrink_op(rhs_b))
    for tag in (1, 2):
        setup = Setup(tag)
        _five_term_into(col, 1, 0, 0, 1, setup, big_n, big_v, DEFAULT)
        for pair in ((1, 0), (0, 1), (1, 1)):
            small, _ = build_T(*pair, setup, N, V)
            big, _ = build_T(*pair, setup, big_n, big_v)
            col.series(f"T{pair} setup {tag} N vs N+1", small, shrink(big))
    W, W_b = w_series(N, V), w_series(big_n, big_v)
    col.series("W N vs N+1", W, shrink(W_b))
    for i in range(4):
        col.ops(f"W[{i},{i}] = nabla^-1 h_{i}^perp nabla at N+1", W_b.coefficient(i, i), n_conj(h_perp(i, big_n)), i, i)
        for j in range(5):
            if i != j and j <= big_v:
                col.ops(f"W[{i},{j}] = 0 at N+1", W_b.coefficient(i, j), GradedOperator.zero(big_n), i, j)
    return col.finish()


def verify_macdonald(N: int = 6) -> CheckReport:
    """Normalization, q<->t symmetry, invertibility, q=t=1 specialization and
    the B_lam eigenvalue of Delta_{e_1}, for every degree <= N; plus the
    closed forms in degrees 2 and 3."""
    from fractions import Fraction
    from math import factorial

    from . import linalg
    from .macdonald import cell_stats, htilde_table
    from .opcalc.operator import Mismatch
    from .symfunc import hall_pair, partitions_of
    from .symfunc.core import p as p_func, s as s_func

    start = time.perf_counter()
    mism = []
    checked = 0

    def expect(label, lam, got, want):
        nonlocal checked
        checked += 1
        if got != want:
            mism.append(Mismatch(0, 0, f"{label} {lam}", str(got), str(want)))

    oracle = {
        (2,): "s[2] + (q)*s[1,1]",
        (1, 1): "s[2] + (t)*s[1,1]",
        (3,): "s[3] + (q + q^2)*s[2,1] + (q^3)*s[1,1,1]",
        (2, 1): "s[3] + (q + t)*s[2,1] + (q*t)*s[1,1,1]",
        (1, 1, 1): "s[3] + (t + t^2)*s[2,1] + (t^3)*s[1,1,1]",
    }
    for d in range(N + 1):
        tab = htilde_table(d)
        parts = partitions_of(d)
        ident = linalg.matmul(tab.to_schur, tab.from_schur)
        expect("to_schur*from_schur", d, ident == linalg.identity(len(parts)), True)
        for i, lam in enumerate(parts):
            H = tab.row(lam)
            expect("<H, s_d>", lam, H.coefficient((d,)) if d else H.coefficient(()), ONE)
            j = parts.index(lam.conjugate())
            swapped = tuple(x.swap_qt() for x in tab.to_schur[j])
            expect("q<->t symmetry", lam, tab.to_schur[i] == swapped, True)
            if d:
                pair = hall_pair(H, p_func(*([1] * d), N=max(d, 1)))
                expect("<H, p_1^d> at q=t=1", lam, pair.evaluate(1, 1), Fraction(factorial(d)))
            b = cell_stats(lam).b_poly
            expect("B_lam at q=t=1", lam, b.evaluate(1, 1), Fraction(d))
            if lam in oracle:
                expect("closed form", lam, H.format(), oracle[lam])
    from .macdonald import delta_eigenvalue

    for d in range(N + 1):
        for lam in partitions_of(d):
            expect("Delta_e1 eigenvalue", lam, delta_eigenvalue(s_func(1, N=N), lam), cell_stats(lam).b_poly)
    window = DegreeWindow(N, N, N, (N + 1) ** 2, (N + 1) ** 2).as_dict()
    return CheckReport(
        "macdonald",
        {"N": N, "assertions": checked},
        window,
        "pass" if not mism else "fail",
        mism,
        int((time.perf_counter() - start) * 1000),
    )
