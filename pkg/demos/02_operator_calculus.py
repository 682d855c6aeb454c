"""Truncated operators, the conjugation S^-1 and its exactness windows.

Run:  python demos/02_operator_calculus.py
"""
from qsf.opcalc import compare_operators, d_op, s_inverse, tau_series
from qsf.symfunc import SymFunc, h

N = 5

# tau_u F = F[X+u]: read off coefficients of u^k.
tau = tau_series(N, 3)
F = h(2, N=N)
print("h2[X+u] =", " + ".join(f"u^{k}*({tau.coefficient(k, 0)(F).format()})" for k in range(3)))

# D_n(1) = (-1)^n e_n
for n in range(4):
    print(f"D_{n}(1) =", d_op(n, N)(SymFunc.one(N)).format())

# S^-1 D_n = -D_{n-1}, checked on the blocks the truncation can compute exactly.
print("\nS^-1(D_n) = -D_{n-1}:")
for n in range(-1, 4):
    got = s_inverse(d_op(n, N))
    mism = compare_operators(got, -d_op(n - 1, N))
    w = got.window
    print(f"  n={n:2d}: {len(mism)} mismatches; exact blocks {w.exact_blocks}/{w.total_blocks}, "
          f"every block exact for inputs of degree <= {w.max_input_degree}")
