import pytest
from hypothesis import given
from hypothesis import strategies as st

from qsf.macdonald import delta_series, nabla_op
from qsf.opcalc import (
    GradedOperator, OperatorSeries, WindowExhaustedError, adjoint, compare_operators, d_op, exp_op, h_perp,
    mult_op, n_conj, s_inverse, series_equal, star_gram, tau_op, tau_series, tau_star_tau_op,
    tau_star_tau_truncated_inverse,
)
from qsf.opcalc.conj import s_inverse_op
from qsf.qtcoeff import ONE, M, Q, T, QtRat, UVPoly
from qsf.symfunc import Alphabet, SymFunc, e, h, hall_pair, p, partitions_of, pexp, s, z_value
from strategies import qt_polys, symfuncs

N = 4


@st.composite
def operators(draw, N=3):
    """Random operators on degrees <= N with small polynomial entries."""
    blocks = {}
    for d in range(N + 1):
        for e_ in range(N + 1):
            if draw(st.booleans()):
                rows = len(partitions_of(e_))
                cols = len(partitions_of(d))
                blocks[(d, e_)] = tuple(
                    tuple(draw(qt_polys()) for _ in range(cols)) for _ in range(rows)
                )
    return GradedOperator(N, blocks)


def test_identity_composition():
    A = h_perp(2, N) + mult_op(s(2, 1, N=N), N)
    I = GradedOperator.identity(N)
    assert I @ A == A and A @ I == A


def test_nabla_inverse_cancels():
    assert nabla_op(N, inverse=True) @ nabla_op(N) == GradedOperator.identity(N)


def test_series_convolution():
    tau = tau_series(N, 3)
    sq = tau @ tau
    want = h_perp(0, N) @ h_perp(2, N) + h_perp(1, N) @ h_perp(1, N) + h_perp(2, N) @ h_perp(0, N)
    assert sq.coefficient(2, 0) == want


def test_tau_examples():
    tau = tau_series(N, 3)
    p1 = p(1, N=N)
    assert tau.coefficient(0, 0)(p1) == p1
    assert tau.coefficient(1, 0)(p1) == SymFunc.one(N)
    h2 = h(2, N=N)
    assert tau.coefficient(1, 0)(h2) == h(1, N=N)
    assert tau.coefficient(2, 0)(h2) == SymFunc.one(N)
    inv = tau_series(N, 3, inverse=True)
    assert series_equal(tau @ inv, OperatorSeries.identity(N, 3)).ok
    assert tau_op(N) @ tau_op(N, inverse=True) == GradedOperator.identity(N)


def test_tau_coefficients_commute():
    for k in range(1, 4):
        for l in range(1, 4):
            assert h_perp(k, N) @ h_perp(l, N) == h_perp(l, N) @ h_perp(k, N)


def test_tau_star_tau():
    ts = tau_star_tau_op(N)
    pe = pexp(Alphabet.X(-(ONE / M)), truncation=N, z_window=0, order=0).coefficient(0, "s")
    assert ts(SymFunc.one(N)) == pe
    p1 = p(1, N=N)
    assert ts(p1) == (pe * (p1 + SymFunc.one(N))).to_basis("s")
    assert ts.raw_compose(tau_star_tau_truncated_inverse(N)).raw_compose(GradedOperator.identity(N)) == (
        GradedOperator.identity(N)
    )


def test_d_op_examples():
    for n in range(0, N + 1):
        want = e(n, N=N).scale((-1) ** n) if n else SymFunc.one(N)
        assert d_op(n, N)(SymFunc.one(N)) == want.to_basis("s")
    assert d_op(-1, N)(SymFunc.one(N)).is_zero()
    # D_0 p_1 by direct expansion: z^0 part of (p1 + M/z)(1 - p1 z + ...) = p1 - M p1
    assert d_op(0, N)(p(1, N=N)) == p(1, N=N).scale(ONE - M)


@pytest.mark.parametrize("n", [-2, -1, 0, 1, 2])
def test_d_op_is_homogeneous(n):
    op = d_op(n, N)
    for d, e_ in op.blocks:
        assert e_ - d == n


def test_tau_conjugation_of_d():
    V = 2
    for n in range(-1, 3):
        Dn = OperatorSeries(N, V, {(0, 0): d_op(n, N)})
        lhs = tau_series(N, V) @ Dn @ tau_series(N, V, inverse=True)
        rhs = OperatorSeries(N, V, {(0, 0): d_op(n, N), (1, 0): -d_op(n - 1, N)})
        assert series_equal(lhs, rhs).ok


@pytest.mark.parametrize("n", [-2, -1, 0, 1, 2, 3])
def test_s_inverse_of_d(n):
    got = s_inverse_op(d_op(n, N))
    report = compare_operators(got, -d_op(n - 1, N))
    assert report == []
    assert got.valid  # something exact survived


def test_s_inverse_identity():
    assert s_inverse_op(GradedOperator.identity(N)) == GradedOperator.identity(N)


@pytest.mark.parametrize("word", [(0, 1), (1, 0), (-1, 2), (2, -1), (1, 1, 0)])
def test_s_inverse_is_multiplicative_on_d_words(word):
    prod = GradedOperator.identity(N)
    images = GradedOperator.identity(N)
    for n in word:
        prod = prod @ d_op(n, N)
        images = images @ s_inverse_op(d_op(n, N))
    lhs = s_inverse_op(prod)
    assert compare_operators(lhs, images) == []
    assert lhs.valid


def test_window_exhaustion_is_reported():
    with pytest.raises(WindowExhaustedError):
        s_inverse_op(d_op(2, 1) @ d_op(2, 1))


def test_star_gram_on_power_sums():
    G, G_inv = star_gram(2)
    # <p_2, p_2>_* = 2 * -(1 - q^2)(1 - t^2), read in Schur coordinates through hall_pair
    p2 = p(2, N=2).to_basis("s")
    p11 = p(1, 1, N=2).to_basis("s")
    parts = partitions_of(2)
    def pair(a, b):
        va, vb = a.vector(2), b.vector(2)
        return sum((va[i] * G[i][j] * vb[j] for i in range(2) for j in range(2)), QtRat(0))
    assert pair(p2, p2) == -2 * M.twist(2)
    assert pair(p2, p11) == 0
    assert pair(p11, p11) == 2 * M * M


def test_hall_adjoint_of_multiplication_is_skewing():
    for k in range(1, 4):
        assert adjoint(mult_op(h(k, N=N), N)) == h_perp(k, N)


@given(operators())
def test_adjoints_are_involutions(L):
    assert adjoint(adjoint(L)) == L
    assert adjoint(adjoint(L, "star"), "star") == L


@given(operators(), operators())
def test_adjoint_reverses_products(A, B):
    for kind in ("hall", "star"):
        assert adjoint(A @ B, kind) == adjoint(B, kind) @ adjoint(A, kind)


@given(symfuncs(max_degree=3, N=3), symfuncs(max_degree=3, N=3))
def test_star_adjoint_pairing(F, G):
    L = mult_op(e(1, N=3), 3) + h_perp(2, 3)
    Ls = adjoint(L, "star")
    def star(a, b):
        acc = QtRat(0)
        for d in range(4):
            Gm = star_gram(d)[0]
            va, vb = a.vector(d), b.vector(d)
            for i in range(len(va)):
                for j in range(len(vb)):
                    acc = acc + va[i] * Gm[i][j] * vb[j]
        return acc
    assert star(L(F), G) == star(F, Ls(G))


def test_series_equal_locates_single_fault():
    A = tau_series(N, 2)
    assert series_equal(A, A).ok
    coeffs = dict(A.coeffs)
    op = coeffs[(1, 0)]
    block = op.block(2, 1)
    bumped = tuple(
        tuple(x + 1 if (r, c) == (0, 0) else x for c, x in enumerate(row)) for r, row in enumerate(block)
    )
    blocks = dict(op.blocks)
    blocks[(2, 1)] = bumped
    coeffs[(1, 0)] = GradedOperator(N, blocks, op.valid, (-N, 0))
    report = series_equal(A, OperatorSeries(N, 2, coeffs))
    assert len(report.mismatches) == 1
    mm = report.mismatches[0]
    assert (mm.u_exp, mm.v_exp, mm.partition) == (1, 0, "2")


def test_delta_series_inverse_is_identity():
    report = series_equal(
        delta_series("delta", N, 3) @ delta_series("delta_inverse", N, 3), OperatorSeries.identity(N, 3)
    )
    assert report.ok and report.compared_blocks > 0


def test_n_conjugation_fixes_nabla_and_delta_prime():
    nab = nabla_op(N)
    assert n_conj(nab) == nab
    dp = delta_series("delta_prime", N, 3)
    assert series_equal(n_conj(dp), dp).ok


def test_s_inverse_series_reindexing():
    ser = OperatorSeries(N, 3, {(0, 1): d_op(1, N)})
    out = s_inverse(ser)
    assert out.support() == [(1, 1)]


def test_degree_window_bookkeeping():
    op = exp_op(N, -1)
    w = op.window
    assert w.max_input_degree == N and w.exact_blocks == w.total_blocks
