"""Named verification suites used by the command line ``verify`` task.

Each suite returns an ordered mapping from check name to a boolean.
"""

from __future__ import annotations

from .algebra import NcAlgebra
from .complexes import builder_of
from .coxeter import CoxeterDatum
from .forms import forms_of
from .homology import ExactMatrix, homology, kron
from .lattice import beta_span_rank
from .reps import sign_module
from .tilde import TildeAlgebra, hilbert_compare


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def acyclic(alg: NcAlgebra) -> dict[str, bool]:
    """The auxiliary complexes on A and ZW (x) A, and C(sign), have zero homology over Z."""
    b = builder_of(alg)
    out = {}
    for kind in ("d", "delta", "r_omega", "l_omega"):
        out[f"A,{kind}"] = homology(b.complex_A(kind)).is_zero()
    for kind in ("par1", "par2", "l_sigma", "r_varsigma"):
        out[f"ZW⊗A,{kind}"] = homology(b.complex_ZWA(kind)).is_zero()
    out["C(sign)"] = homology(b.relative_complex(sign_module(alg.datum), "C"), "Q").is_zero()
    return out


def d_squared(alg: NcAlgebra) -> dict[str, bool]:
    """Consecutive boundaries compose to zero in every built complex."""
    b = builder_of(alg)
    out = {}
    for kind in ("d", "delta", "r_omega", "l_omega"):
        out[f"A,{kind}"] = b.complex_A(kind).verify()
    for kind in ("par1", "par2", "l_sigma", "r_varsigma"):
        out[f"ZW⊗A,{kind}"] = b.complex_ZWA(kind).verify()
    for space in ("M", "F", "M/W", "F/W"):
        out[f"{space},chain"] = b.complex_space(space).verify()
        out[f"{space},cochain"] = b.cocomplex_space(space).verify()
    for kind in ("C", "K", "Cstar", "Kstar"):
        out[f"{kind}(sign)"] = b.relative_complex(sign_module(alg.datum), kind).verify()
    return out


def unimodular(alg: NcAlgebra) -> dict[str, bool]:
    f = forms_of(alg)
    out = {}
    for k in range(len(alg.dims())):
        g = f.gram(k)
        out[f"gram({k})"] = g.is_upper_unitriangular() and abs(g.determinant()) == 1
    return out


def _gram_matrix(alg: NcAlgebra, k: int) -> list[list[int]]:
    return forms_of(alg).gram(k).entries


def adjunction(alg: NcAlgebra) -> dict[str, bool]:
    """Left/right multiplication by a_t is adjoint to delta_t/d_t; on ZW (x) A,
    l_sigma is adjoint to the first partial boundary and r_varsigma to the second.

    With <x, y> = x^T G y, adjointness of L (degree k -> k+1) and P
    (k+1 -> k) reads L^T G_{k+1} = G_k P.
    """
    f = forms_of(alg)
    b = builder_of(alg)
    n = len(alg.dims()) - 1
    grams = {k: ExactMatrix.from_dense(_gram_matrix(alg, k)) for k in range(n + 1)}
    out = {"l_t/delta_t": True, "r_t/d_t": True}
    for k in range(n):
        if not alg.basis(k) or not alg.basis(k + 1):
            continue
        for t in range(alg.datum.nrefl):
            pairs = (("l_t/delta_t", "l_t", "delta_t"), ("r_t/d_t", "r_t", "d_t"))
            for name, up, down in pairs:
                lm = f.matrix(up, k, t)
                pm = f.matrix(down, k + 1, t)
                if lm.transpose() @ grams[k + 1] != grams[k] @ pm:
                    out[name] = False
    nw = len(b.group_data()[0])
    zw = {k: kron(_identity(nw), grams[k]) for k in range(n + 1)}
    for name, up, down in (("l_sigma/par1", "l_sigma", "par1"), ("r_varsigma/par2", "r_varsigma", "par2")):
        upc, downc = b.complex_ZWA(up), b.complex_ZWA(down)
        ok = True
        for k in range(n):
            lm, pm = upc.boundaries[k], downc.boundaries[k + 1]
            if lm.transpose() @ zw[k + 1] != zw[k] @ pm:
                ok = False
        out[name] = ok
    return out


def fw_pipelines(alg: NcAlgebra) -> dict[str, bool]:
    """Cohomology of F/W from the cochain complex versus the ideal quotient,
    and universal-coefficient consistency with the homology."""
    b = builder_of(alg)
    co = homology(b.cocomplex_space("F/W"))
    ch = homology(b.complex_space("F/W"))
    quotient = b.ideal_quotient_report("F/W")
    same = all(
        co.betti[e["degree"]] == e["free_rank"] and list(co.torsion[e["degree"]]) == e["torsion"] for e in quotient
    )
    uct = all(co.betti[k] == ch.betti[k] for k in ch.degrees) and all(
        tuple(co.torsion.get(k, ())) == tuple(ch.torsion.get(k - 1, ())) for k in co.degrees
    )
    return {"cochain=ideal quotient": same, "universal coefficients": uct}


def b_oracle(alg: NcAlgebra) -> dict[str, bool]:
    report = alg.b_oracle_check()
    lat = alg.lattice
    spans = all(
        beta_span_rank(lat, w) == len(alg.basis_by_w()[w]) for k, layer in enumerate(lat.strata()) if k for w in layer
    )
    return {"ranks and dims": report["pass"], "beta spans": spans}


def hopf(datum: CoxeterDatum, maxdeg: int = 4) -> dict[str, bool]:
    """Hopf axioms, skew derivations and the Euler identity on the covering algebra."""
    from fractions import Fraction

    T = TildeAlgebra(datum, maxdeg + 1)
    out = {}
    coassoc = counit = antipode = True
    for k in range(maxdeg + 1):
        for u in T.basis(k):
            x = {u: Fraction(1)}
            D = T.comult(x)
            coassoc &= T.comult_left(D) == T.comult_right(D)
            left: dict = {}
            right: dict = {}
            s_left: dict = {}
            s_right: dict = {}
            for (a, bw), c in D.items():
                if not a:
                    right[bw] = right.get(bw, 0) + c
                if not bw:
                    left[a] = left.get(a, 0) + c
                for w, v in T.multiply(T.antipode({a: Fraction(1)}), {bw: Fraction(1)}).items():
                    s_left[w] = s_left.get(w, 0) + c * v
                for w, v in T.multiply({a: Fraction(1)}, T.antipode({bw: Fraction(1)})).items():
                    s_right[w] = s_right.get(w, 0) + c * v
            clean = lambda m: {key: v for key, v in m.items() if v}
            counit &= clean(left) == x == clean(right)
            unit = {(): Fraction(1)} if k == 0 else {}
            antipode &= clean(s_left) == unit == clean(s_right)
    out["coassociativity"] = coassoc
    out["counit"] = counit
    out["antipode"] = antipode
    out["nabla relations"] = all(T.nabla_relations_hold(k) for k in range(2, maxdeg + 1))
    out["nabla D = D nabla"] = all(T.nabla_d_commute(k) for k in range(maxdeg + 1))
    out["Euler identity"] = all(T.euler_identity_holds(k) for k in range(maxdeg + 1))
    out["adjunctions"] = all(T.adjunctions_hold(k) for k in range(1, maxdeg + 1))
    out["acyclicity"] = all(all(v) for v in T.acyclicity_report(maxdeg).values())
    return out


def hilbert(n: int, maxdeg: int) -> dict[str, bool]:
    r = hilbert_compare(n, maxdeg)
    return {"tilde = fk": r["equal"], "published series": r["matches_expected"]}


SUITES = {
    "acyclic": acyclic,
    "d-squared": d_squared,
    "unimodular": unimodular,
    "adjunction": adjunction,
    "fw-pipelines": fw_pipelines,
    "b-oracle": b_oracle,
}
