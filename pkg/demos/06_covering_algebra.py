"""The covering quadratic algebra: Hilbert series against E_n and its
braided Hopf structure.

Run: python demos/06_covering_algebra.py
"""

from ncalgebra import TildeAlgebra, build_coxeter, hilbert_compare, present_tilde
from ncalgebra.verify import hopf

for line in present_tilde(build_coxeter("A", 2)).describe():
    print("relation:", line)

for n, top in ((3, 4), (4, 12)):
    r = hilbert_compare(n, top)
    print(f"n={n}: covering {r['tilde']}")
    print(f"      E_n      {r['fk']}  equal={r['equal']} published={r['matches_expected']}")

T = TildeAlgebra(build_coxeter("A", 2), 4)
lab = T.datum.refl_label
name = lambda w: "·".join(f"a{lab(t)}" for t in w) or "1"
x = T.word((0, 1))
print(f"Delta({name((0, 1))}):")
for (left, right), c in T.comult(x).items():
    print(f"   {int(c):+} {name(left)} ⊗ {name(right)}")
print(f"S({name((0, 1))}) =", ", ".join(f"{int(c):+} {name(w)}" for w, c in T.antipode(x).items()))
print("pairing <a, a> =", T.pair(T.word((0,)), T.word((0,))))

print("Hopf checks on Sym3:", hopf(build_coxeter("A", 2), 4))
