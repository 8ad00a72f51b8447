"""Reflections, the bipartite Coxeter element and the interval [e, gamma].

Run: python demos/01_lattice.py
"""

from ncalgebra import NcpLattice, build_coxeter

d = build_coxeter("A", 3)
print("group:", d.family, d.rank, "order", d.order())
print("gamma =", d.label(d.gamma))

# reflections in the order used for every word in the package
print("reflection order:", [d.refl_label(i) for i in range(d.nrefl)])

lat = NcpLattice(d)
sizes = [len(layer) for layer in lat.strata()]
print("rank sizes of [e, gamma]:", sizes, "total", sum(sizes))

# Moebius values two ways: closed count of decreasing chains and recursion
for w in lat.strata()[2][:3]:
    print(" ", d.label(w), "mu =", lat.mobius(w), "recursive", lat.mobius_recursive(w),
          "decreasing:", [[d.refl_label(t) for t in f] for f in lat.decreasing_rex(w)])

# the dihedral case is purely combinatorial
i5 = build_coxeter("I2", 5)
lat5 = NcpLattice(i5)
print("I2(5): factorizations of gamma", lat5.rex(i5.gamma))
print("I2(5): mu(gamma) =", lat5.mobius(i5.gamma))
