"""Differentials d and delta, the twist kappa and the unimodular pairing.

Run: python demos/03_forms.py
"""

from ncalgebra import NcAlgebra, build_coxeter, forms_of

alg = NcAlgebra(build_coxeter("A", 2))
f = forms_of(alg)
show = lambda x: {alg.word_label(w): c for w, c in x.items()} or 0

for w in alg.basis(2):
    x = {w: 1}
    print(alg.word_label(w))
    print("   d     ->", show(f.d(x)))
    print("   delta ->", show(f.delta(x)))
    print("   kappa ->", show(f.kappa(x)))
    print("   d d = 0:", f.d(f.d(x)) == {}, " d delta = delta d:", f.d(f.delta(x)) == f.delta(f.d(x)))

# the Gram matrix is unitriangular in the lexicographic order of words
for k in range(3):
    g = f.gram(k)
    print(f"gram({k}) =", g.entries, "det", g.determinant())
