"""A second, independent construction of H~ for small degrees, using sympy.

Symmetric functions of degree d are polynomials in power-sum symbols p1..pd.
Schur functions come from Jacobi-Trudi, h_n from exp(sum p_k z^k / k), and the
pairing from <p_mu, p_nu> = z_mu delta.  Nothing here touches the qsf package.
"""
from functools import lru_cache
from math import factorial

import sympy as sp

q, t, z = sp.symbols("q t z")


def partitions(d, largest=None):
    largest = d if largest is None else largest
    if d == 0:
        yield ()
        return
    for first in range(min(d, largest), 0, -1):
        for rest in partitions(d - first, first):
            yield (first,) + rest


def zee(mu):
    out = 1
    for k in set(mu):
        c = mu.count(k)
        out *= k**c * factorial(c)
    return out


@lru_cache(maxsize=None)
def psym(k):
    return sp.Symbol(f"p{k}")


@lru_cache(maxsize=None)
def h_p(n):
    if n < 0:
        return sp.Integer(0)
    gen = sp.exp(sum(psym(k) * z**k / k for k in range(1, n + 1)))
    return sp.expand(sp.series(gen, z, 0, n + 1).removeO().coeff(z, n))


def schur_p(lam):
    n = len(lam)
    if n == 0:
        return sp.Integer(1)
    mat = sp.Matrix(n, n, lambda i, j: h_p(lam[i] - i + j))
    return sp.expand(mat.det())


def pairing(f, g, d):
    f, g = sp.Poly(sp.expand(f), *[psym(k) for k in range(1, d + 1)]), sp.expand(g)
    gp = sp.Poly(g, *[psym(k) for k in range(1, d + 1)])
    acc = 0
    for mono, c in f.terms():
        mu = tuple(k for k in range(d, 0, -1) for _ in range(mono[k - 1]))
        acc += c * gp.coeff_monomial(mono) * zee(mu)
    return sp.simplify(acc)


def plethysm_scalar(f, alpha, d):
    return sp.expand(f.subs({psym(k): psym(k) * alpha.subs({q: q**k, t: t**k}, simultaneous=True) for k in range(1, d + 1)}, simultaneous=True))


def dominates(mu, lam):
    a = b = 0
    for i in range(max(len(mu), len(lam))):
        a += mu[i] if i < len(mu) else 0
        b += lam[i] if i < len(lam) else 0
        if a < b:
            return False
    return True


def conjugate(lam):
    return tuple(sum(1 for x in lam if x > i) for i in range(lam[0])) if lam else ()


def htilde_oracle(lam):
    """Schur coefficients {mu: coefficient} of H~_lam, solved from the axioms."""
    d = sum(lam)
    parts = list(partitions(d))
    cs = sp.symbols(f"c0:{len(parts)}")
    H = sum(c * schur_p(mu) for c, mu in zip(cs, parts))
    eqs = [sp.Eq(pairing(H, schur_p((d,)), d), 1)]
    Hq = plethysm_scalar(H, 1 - q, d)
    Ht = plethysm_scalar(H, 1 - t, d)
    for mu in parts:
        if not dominates(mu, lam):
            eqs.append(sp.Eq(pairing(Hq, schur_p(mu), d), 0))
        if not dominates(mu, conjugate(lam)):
            eqs.append(sp.Eq(pairing(Ht, schur_p(mu), d), 0))
    sol = sp.solve(eqs, cs, dict=True)
    assert len(sol) == 1
    return {mu: sp.factor(sol[0][c]) for c, mu in zip(cs, parts)}
