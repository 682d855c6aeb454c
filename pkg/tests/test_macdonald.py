from math import factorial

import pytest
import sympy as sp

from qsf import linalg
from qsf.macdonald import (
    cell_stats, configure_cache, delta_op, delta_series, htilde, htilde_table, nabla_op, solve_htilde,
)
from qsf.opcalc import GradedOperator, OperatorSeries, series_equal
from qsf.qtcoeff import ONE, M, Q, T, ZERO, QtRat, qt_format, qt_poly
from qsf.symfunc import Partition, SymFunc, e, h, hall_pair, p, partitions_of, s
from oracle_sympy import htilde_oracle

N = 5


def _to_sympy(r: QtRat):
    q, t = sp.symbols("q t")
    def poly(terms):
        return sum(int(c) * q**i * t**j for (i, j), c in terms.items())
    return sp.cancel(poly(r.num_terms()) / poly(r.den_terms()))


@pytest.mark.parametrize("lam", [lam for d in range(1, 5) for lam in partitions_of(d)])
def test_matches_independent_solver(lam):
    want = htilde_oracle(tuple(lam))
    got = htilde(lam)
    for mu in partitions_of(lam.size):
        assert sp.simplify(_to_sympy(got.coefficient(mu)) - want[tuple(mu)]) == 0


def test_small_closed_forms():
    assert htilde((1,)) == s(1, N=1)
    assert htilde((2,)) == s(2, N=2) + s(1, 1, N=2).scale(Q)
    assert htilde((1, 1)) == s(2, N=2) + s(1, 1, N=2).scale(T)
    assert htilde((2, 1)).format() == "s[3] + (q + t)*s[2,1] + (q*t)*s[1,1,1]"


@pytest.mark.parametrize("d", range(0, 7))
def test_table_invariants(d):
    tab = htilde_table(d)
    n = len(tab.to_schur)
    prod = linalg.matmul(tab.to_schur, tab.from_schur)
    assert prod == linalg.identity(n)
    parts = partitions_of(d)
    for i, lam in enumerate(parts):
        row = tab.row(lam)
        assert row.coefficient((d,) if d else ()) == 1
        conj = parts.index(lam.conjugate())
        for j in range(n):
            assert tab.to_schur[i][j] == tab.to_schur[conj][j].swap_qt()
        if d:
            value = hall_pair(row, p(*([1] * d), N=d)).evaluate(1, 1)
            assert value == factorial(d)


def test_cell_stats():
    empty = cell_stats(())
    assert empty.b_poly == 0 and empty.n_stat == 0
    st = cell_stats((2, 1))
    assert qt_format(st.b_poly) == "1 + q + t" and st.n_stat == 1 and st.nprime_stat == 1
    st = cell_stats((3,))
    assert st.b_poly == ONE + Q + Q**2 and st.n_stat == 0 and st.nprime_stat == 3
    for d in range(7):
        for lam in partitions_of(d):
            st = cell_stats(lam)
            assert st.b_poly.evaluate(1, 1) == d
            assert st.n_stat == lam.n_stat() and st.nprime_stat == lam.n_prime_stat()


def test_delta_eigenvalues():
    H21 = htilde((2, 1), N)
    assert delta_op(e(1, N=N))(H21) == H21.scale(ONE + Q + T)
    H1 = htilde((1,), N)
    assert delta_op(e(1, N=N), prime=True)(H1) == H1.scale(ONE - ONE / M)
    one = SymFunc.one(N)
    assert delta_op(h(2, N=N) + SymFunc.one(N).scale(3))(one) == one.scale(3)


def test_nabla():
    assert nabla_op(N)(s(1, N=N)) == s(1, N=N).scale(-1)
    H2 = htilde((2,), N)
    assert nabla_op(N)(H2) == H2.scale(Q)
    assert nabla_op(N, inverse=True) @ nabla_op(N) == GradedOperator.identity(N)


def test_diagonal_operators_commute():
    A = delta_op(e(2, N=N))
    B = delta_op(h(1, N=N) + p(2, N=N), prime=True)
    nab = nabla_op(N)
    assert A @ B == B @ A
    assert nab @ A == A @ nab


def test_delta_series_relations():
    V = 3
    dv = delta_series("delta", N, V)
    dinv = delta_series("delta_inverse", N, V)
    assert series_equal(dv @ dinv, OperatorSeries.identity(N, V)).ok
    H1 = htilde((1,), N)
    assert dv.coefficient(0, 1)(H1) == H1.scale(-1)
    # Delta'_v = pExp[v/M] Delta_v, with pExp[v/M] = sum_n v^n h_n[1/M]
    pref = {}
    for n in range(V + 1):
        pref[(0, n)] = GradedOperator.identity(N).scale(_h_of_scalar(n, ONE / M))
    pexp_v = OperatorSeries(N, V, pref)
    assert series_equal(delta_series("delta_prime", N, V), pexp_v @ dv).ok


def _h_of_scalar(n, a):
    from qsf.macdonald import scalar_plethysm

    return scalar_plethysm(h(n, N=n) if n else SymFunc.one(0), a)


def test_disk_cache_round_trip(tmp_path):
    configure_cache(tmp_path)
    try:
        first = htilde_table(4)
        assert (tmp_path / "htilde_d4.qsf").exists()
        configure_cache(tmp_path)
        again = htilde_table(4)
        assert again.to_schur == first.to_schur == solve_htilde(4)
    finally:
        configure_cache(None)
