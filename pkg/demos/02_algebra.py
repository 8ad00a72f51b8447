"""The quadratic algebra on [e, gamma]: normal forms, dimensions, omega.

Run: python demos/02_algebra.py
"""

from ncalgebra import NcAlgebra, build_coxeter

alg = NcAlgebra(build_coxeter("A", 3))
d = alg.datum
print("graded dimensions:", alg.dims(), "total", alg.total_rank())

# basis words have decreasing letters in the reflection order
for w in alg.basis(2)[:4]:
    print("  basis word", alg.word_label(w))

# straightening an increasing word
word = (0, 5)
print(alg.word_label(word), "=", {alg.word_label(u): c for u, c in alg.normalize(word).items()})

# a crossing pair multiplies to zero
a, b = 2, 5
print(d.refl_label(a), "*", d.refl_label(b), "=", alg.normalize((a, b)) or 0)

om = alg.omega()
print("omega^2 == 0:", alg.multiply(om, om) == {})

# the dihedral straightening rule for I2(3)
i3 = NcAlgebra(build_coxeter("I2", 3))
print("I2(3): a_t1 a_t3 =", {i3.word_label(u): c for u, c in i3.normalize((0, 2)).items()})
