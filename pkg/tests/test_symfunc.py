from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qsf.qtcoeff import ONE, Q, T, QtRat
from qsf.symfunc import (
    Alphabet, Partition, SymFunc, change_matrix, dominance_leq, e, h, hall_pair, m, multiply, p,
    partitions_of, pexp, plethysm, s, skew_apply,
)
from strategies import symfuncs


def test_partitions_of_small():
    assert partitions_of(0) == (Partition(()),)
    assert [tuple(x) for x in partitions_of(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(partitions_of(8)) == 22


def test_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_dominance_examples():
    assert dominance_leq((1, 1, 1), (3,))
    assert not dominance_leq((3,), (1, 1, 1))


@given(st.integers(0, 7).flatmap(lambda d: st.sampled_from(partitions_of(d))))
def test_conjugation_is_an_involution_reversing_dominance(lam):
    assert lam.conjugate().conjugate() == lam
    for mu in partitions_of(lam.size):
        assert dominance_leq(lam, mu) == dominance_leq(mu.conjugate(), lam.conjugate())


def test_basis_changes():
    assert h(2, N=4).to_basis("powersum") == SymFunc({(2,): Fraction(1, 2), (1, 1): Fraction(1, 2)}, "p", 4)
    assert s(1, 1, N=4).to_basis("monomial") == m(1, 1, N=4)
    assert h(2, 1, N=4).to_basis("schur") == s(3, N=4) + s(2, 1, N=4)


@given(symfuncs(max_degree=4, N=4), st.sampled_from(["m", "e", "h", "p", "s"]))
def test_basis_round_trip(F, target):
    assert F.to_basis(target).to_basis("schur") == F


def test_products():
    assert multiply(p(1, N=4), p(1, N=4)) == p(1, 1, N=4)
    F = s(2, 1, N=4)
    assert multiply(SymFunc.one(4), F) == F
    assert multiply(e(1, N=4).to_basis("m"), e(1, N=4)) == m(2, N=4) + m(1, 1, N=4).scale(2)


def test_hall_pairing_examples():
    assert hall_pair(p(2, N=4), p(2, N=4)) == 2
    assert hall_pair(p(2, N=4), p(1, 1, N=4)) == 0
    assert hall_pair(h(2, N=4), m(2, N=4)) == 1


def test_h_and_m_are_dual():
    for d in range(6):
        for lam in partitions_of(d):
            for mu in partitions_of(d):
                expected = 1 if lam == mu else 0
                assert hall_pair(h(lam, N=5), m(mu, N=5)) == expected


def test_skewing_examples():
    G = s(2, 1, N=4)
    assert skew_apply(SymFunc.one(4), G) == G
    assert skew_apply(h(1, N=4), p(1, N=4)) == SymFunc.one(4)
    assert skew_apply(h(1, N=4), h(2, N=4)) == h(1, N=4)


@given(symfuncs(max_degree=2, N=4), symfuncs(max_degree=4, N=4), symfuncs(max_degree=4, N=4))
def test_skewing_is_hall_adjoint_of_multiplication(F, G, H):
    assert hall_pair(skew_apply(F, G), H) == hall_pair(G, multiply(F, H))


def _plain(Z, N):
    return Z.coefficient(0, "schur")


def test_plethysm_examples():
    u_alpha = Alphabet.X() + Alphabet.unit(1, u=1)
    out = plethysm(p(2, N=4), u_alpha).coefficient(0, "p")
    assert out.coefficient((2,)) == 1
    assert out.coefficient(()).coefficient(2, 0) == 1
    assert _plain(plethysm(e(2, N=4), Alphabet.X(-1)), 4) == h(2, N=4)
    got = plethysm(h(2, N=4), Alphabet.X(ONE - T)).coefficient(0, "p")
    want = SymFunc({(1, 1): (ONE - T) ** 2 / 2, (2,): (ONE - T**2) / 2}, "p", 4)
    assert got == want


def test_plethysm_identity_alphabet():
    F = s(3, 1, N=5) + s(2, N=5).scale(Q)
    assert _plain(plethysm(F, Alphabet.X()), 5) == F


@given(symfuncs(max_degree=2, N=4), symfuncs(max_degree=2, N=4), st.sampled_from([ONE - Q, QtRat(-1), Q + T]))
def test_plethysm_is_a_ring_homomorphism(F, G, c):
    A = Alphabet.X(c)
    lhs = _plain(plethysm(multiply(F, G), A), 4)
    rhs = multiply(_plain(plethysm(F, A), 4), _plain(plethysm(G, A), 4))
    assert lhs == rhs
    assert _plain(plethysm(F + G, A), 4) == _plain(plethysm(F, A), 4) + _plain(plethysm(G, A), 4)


def test_pexp_examples():
    one_minus_uz = pexp(Alphabet.unit(-1, u=1, z=1), truncation=3, z_window=3, order=3)
    assert one_minus_uz.coefficient(0, "s") == SymFunc.one(3)
    assert one_minus_uz.coefficient(1, "s").coefficient(()).coefficient(1, 0) == -1
    assert one_minus_uz.coefficient(2, "s").is_zero()
    assert pexp(Alphabet.X(), truncation=2).coefficient(0, "h") == SymFunc.one(2, "h") + h(1, N=2) + h(2, N=2)
    series = pexp(Alphabet.X(-1, z=1), truncation=4, z_window=4)
    for n in range(5):
        want = e(n, N=4).scale((-1) ** n) if n else SymFunc.one(4)
        assert series.coefficient(n, "s") == want.to_basis("s")


def test_pexp_refuses_pure_scalars():
    with pytest.raises(ValueError):
        pexp(Alphabet.unit(1), truncation=2)


def test_change_matrices_are_inverse():
    for d in range(6):
        A = change_matrix("schur", "monomial", d)
        B = change_matrix("monomial", "schur", d)
        n = len(A)
        for i in range(n):
            for j in range(n):
                acc = sum((A[i][k] * B[k][j] for k in range(n)), QtRat(0))
                assert acc == (1 if i == j else 0)
