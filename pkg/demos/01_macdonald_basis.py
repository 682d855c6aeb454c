"""Tour of the modified Macdonald basis.

Run:  python demos/01_macdonald_basis.py
"""
from qsf.macdonald import cell_stats, delta_op, htilde, nabla_op
from qsf.qtcoeff import qt_format
from qsf.symfunc import e, partitions_of, s

N = 4

print("H~_lam in the Schur basis, degrees 1..3")
for d in range(1, 4):
    for lam in partitions_of(d):
        print(f"  H~{lam}  =  {htilde(lam).format()}")

# The q<->t symmetry: conjugating the shape swaps the two parameters.
print("\nH~_(3,1) versus H~_(2,1,1) with q and t exchanged:")
a = htilde((3, 1))
b = htilde((2, 1, 1)).map_coefficients(lambda c: c.swap_qt())
print("  equal:", a == b)

print("\nCell statistics B_lam = sum q^col t^row:")
for lam in [(2, 1), (3,), (2, 2)]:
    st = cell_stats(lam)
    print(f"  {lam}: B = {qt_format(st.b_poly)}, n = {st.n_stat}, n' = {st.nprime_stat}")

# Delta_{e_1} acts on H~_lam by B_lam; nabla by a signed monomial.
H = htilde((2, 1), N)
print("\nDelta_e1 H~_(2,1) / H~_(2,1) =", qt_format(delta_op(e(1, N=N))(H).coefficient((3,))))
print("nabla s_1 =", nabla_op(N)(s(1, N=N)).format())
print("nabla s_2 =", nabla_op(N)(s(2, N=N)).format())
