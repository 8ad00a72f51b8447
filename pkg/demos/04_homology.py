"""Integral homology of M, F, M/W, F/W from explicit chain complexes.

Run: python demos/04_homology.py
"""

from ncalgebra import NcAlgebra, build_coxeter, builder_of, homology
from ncalgebra.verify import fw_pipelines

alg = NcAlgebra(build_coxeter("A", 3))
b = builder_of(alg)

for space in ("M", "M/W", "F", "F/W"):
    res = homology(b.complex_space(space))
    betti, torsion = res.as_lists()
    print(f"H_*({space}; Z): free ranks {betti}, torsion {torsion}")

res = homology(b.cocomplex_space("F/W"))
print("H^*(F/W; Z):", res.as_lists())

# the same cohomology from the ideal quotient (A omega ∩ omega A) / omega A omega
print("ideal quotient:", b.ideal_quotient_report("F/W"))
print("pipelines agree:", fw_pipelines(alg))

# acyclic auxiliary complexes
for kind in ("d", "delta", "r_omega", "l_omega"):
    print(f"(A, {kind}) acyclic:", homology(b.complex_A(kind)).is_zero())
