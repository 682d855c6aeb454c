"""Build T_{m,n} by its Euclid word and check five-term relations in both setups.

Run:  python demos/03_five_term.py      (about a minute at N=5, V=4)
"""
from qsf.fiveterm import Variant, build_T, verify_five_term, verify_w_props

N, V = 5, 4

for tag in (1, 2):
    for mn in [(1, 1), (2, 1), (1, 2), (3, 2)]:
        _, trace = build_T(*mn, tag, N, V)
        print(f"setup {tag}  T{mn}: from {trace.base} via [{' '.join(trace.word) or '-'}]")

print()
for pairs in [(1, 0, 0, 1), (1, 1, 0, 1), (2, 1, 1, 1)]:
    for tag in (1, 2):
        rep = verify_five_term(*pairs, tag, N, V)
        print(f"five-term {pairs} setup {tag}: {rep.status} ({rep.millis} ms)")

# The sign of nabla is load-bearing: the unsigned variant breaks the relation.
bad = verify_five_term(1, 0, 0, 1, 1, N, V, Variant(signed_nabla=False))
m = bad.mismatches[0]
print(f"\nunsigned nabla: {bad.status}, {len(bad.mismatches)} mismatches, "
      f"first at u^{m.u_exp} v^{m.v_exp} on s[{m.partition}]")

# W_{i,i} carries a (-1)^i relative to S^-1(Delta'_{e_i}).
print("W diagonal, signed form:", verify_w_props(N, V, 3, 3).status)
lit = verify_w_props(N, V, 3, 3, literal=True)
print("W diagonal, unsigned form:", lit.status,
      [s["label"] for s in lit.params["subchecks"] if s["mismatches"]])
