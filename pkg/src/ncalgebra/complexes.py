"""Explicit based (co)chain complexes built from the noncrossing algebra.

Boundary matrices act on coordinate columns: column j holds the image of
basis element j. Tensor products ZW (x) X and U (x) X are ordered
group-major (resp. module-major). The group algebra ZW is a right
module, w -> w t, and a right module U acts on row vectors, u -> u R(t),
which as a column operator is the transpose R(t)^T.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .algebra import NcAlgebra, Word, add_into
from .coxeter import COMPOSITION_CONVENTION, GAMMA_CONVENTION
from .forms import forms_of
from .homology import (
    ExactMatrix,
    ResourceError,
    _flint,
    intersect_lattices,
    kron,
    lattice_basis,
    product_is_zero,
    quotient_invariants,
)

SIZE_GUARD = 5_000_000


@dataclass
class BasedModule:
    labels: list[str]

    @property
    def rank(self) -> int:
        return len(self.labels)


@dataclass
class ChainComplex:
    """Terms indexed by degree; ``boundaries[k]`` leaves degree k.

    Chain complexes lower the degree by one, cochain complexes raise it.
    """

    direction: str
    terms: dict[int, BasedModule]
    boundaries: dict[int, ExactMatrix]
    label: str = ""
    meta: dict = field(default_factory=dict)

    def degrees(self) -> list[int]:
        return sorted(self.terms)

    def rank(self, k: int) -> int:
        t = self.terms.get(k)
        return t.rank if t else 0

    def target(self, k: int) -> int:
        return k - 1 if self.direction == "chain" else k + 1

    def check_shapes(self) -> bool:
        for k, m in self.boundaries.items():
            if m.shape != (self.rank(self.target(k)), self.rank(k)):
                return False
        return True

    def verify(self) -> bool:
        """Shapes match and consecutive boundaries compose to zero."""
        if not self.check_shapes():
            return False
        for k, m in self.boundaries.items():
            nxt = self.boundaries.get(self.target(k))
            if nxt is not None and not product_is_zero(nxt, m):
                return False
        return True

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * self.rank(k) for k in self.terms)

    def to_json(self) -> dict:
        degs = self.degrees()
        return {
            "label": self.label,
            "direction": self.direction,
            "degrees": degs,
            "terms": [{"degree": k, "rank": self.rank(k), "basis": self.terms[k].labels} for k in degs],
            "boundaries": [
                dict(source=k, target=self.target(k), **self.boundaries[k].to_json()) for k in sorted(self.boundaries)
            ],
            "meta": self.meta,
        }

    @classmethod
    def from_json(cls, data: dict) -> "ChainComplex":
        terms = {t["degree"]: BasedModule(t["basis"]) for t in data["terms"]}
        bds = {b["source"]: ExactMatrix.from_json(b) for b in data["boundaries"]}
        return cls(data["direction"], terms, bds, data.get("label", ""), data.get("meta", {}))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


class SubLattice:
    """A sublattice of Z^dim given by independent basis vectors, with
    exact coordinate extraction for vectors it contains."""

    def __init__(self, basis: list[list[int]], dim: int):
        self.basis = basis
        self.dim = dim
        self._flint = _flint()
        self._rows, self._inv = self._left_inverse()

    def _left_inverse(self):
        k = len(self.basis)
        if k == 0:
            return [], None
        fl = self._flint
        if fl is not None:
            # pivot columns of the row echelon form are independent coordinates
            r, _, rk = fl.fmpz_mat(self.basis).rref()
            if rk != k:
                raise ValueError("basis vectors are dependent")
            chosen = [next(i for i in range(self.dim) if r[row, i]) for row in range(k)]
            square = fl.fmpz_mat([[self.basis[j][i] for j in range(k)] for i in chosen])
            return chosen, square.inv()
        # choose k independent coordinates by elimination on the transpose
        cols = [[Fraction(self.basis[j][i]) for j in range(k)] for i in range(self.dim)]
        chosen = []
        reduced: list[tuple[int, list[Fraction]]] = []
        for i, row in enumerate(cols):
            v = list(row)
            for p, prow in reduced:
                if v[p]:
                    f = v[p] / prow[p]
                    v = [a - f * b for a, b in zip(v, prow)]
            piv = next((c for c in range(k) if v[c]), None)
            if piv is not None:
                reduced.append((piv, v))
                chosen.append(i)
                if len(chosen) == k:
                    break
        if len(chosen) != k:
            raise ValueError("basis vectors are dependent")
        square = [cols[i] for i in chosen]
        return chosen, _invert(square)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coords(self, v: list[int]) -> list[int]:
        return self.coords_many([v])[0]

    def coords_many(self, vectors: list[list[int]]) -> list[list[int]]:
        """Coordinates of each vector in the basis; raises if a vector is
        outside the sublattice or its coordinates are not integral."""
        k = len(self.basis)
        if not vectors:
            return []
        if k == 0:
            if any(any(v) for v in vectors):
                raise ValueError("vector outside the sublattice")
            return [[] for _ in vectors]
        fl = self._flint
        if fl is not None:
            sub = fl.fmpq_mat(fl.fmpz_mat([[v[i] for v in vectors] for i in self._rows]))
            c = self._inv * sub
            cz, den = c.numer_denom()
            if den != 1:
                raise ArithmeticError("coordinates are not integral")
            if fl.fmpz_mat(self.basis).transpose() * cz != fl.fmpz_mat([list(v) for v in vectors]).transpose():
                raise ValueError("vector outside the sublattice")
            cols = cz.tolist()
            return [[int(cols[a][j]) for a in range(k)] for j in range(len(vectors))]
        out = []
        for v in vectors:
            sub = [v[i] for i in self._rows]
            c = [sum(self._inv[a][b] * sub[b] for b in range(k)) for a in range(k)]
            if any(x.denominator != 1 for x in c):
                raise ArithmeticError("coordinates are not integral")
            c = [int(x) for x in c]
            check = [sum(c[j] * self.basis[j][i] for j in range(k)) for i in range(self.dim)]
            if check != list(v):
                raise ValueError("vector outside the sublattice")
            out.append(c)
        return out


def _fill(m: ExactMatrix, src: SubLattice, tgt: SubLattice | None, op, message: str) -> None:
    """Write the coordinates in ``tgt`` of op applied to each basis vector of ``src``."""
    cols, imgs = [], []
    for j, v in enumerate(src.basis):
        img = _apply(op, v)
        if any(img):
            cols.append(j)
            imgs.append(img)
    if imgs and tgt is None:
        raise ArithmeticError(message)
    for j, c in zip(cols, tgt.coords_many(imgs) if imgs else []):
        for i, x in enumerate(c):
            if x:
                m.add(i, j, x)


def _invert(a: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(a)
    m = [list(a[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        p = next(i for i in range(c, n) if m[i][c])
        m[c], m[p] = m[p], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [row[n:] for row in m]


class ComplexBuilder:
    """Builds every complex of an algebra; caches the per-degree operator
    matrices shared between constructions."""

    def __init__(self, alg: NcAlgebra, size_guard: int | None = SIZE_GUARD):
        self.alg = alg
        self.datum = alg.datum
        self.forms = forms_of(alg)
        self.n = alg.n
        self.size_guard = size_guard
        self._ops: dict = {}
        self._dA: dict[int, tuple[list[Word], SubLattice]] = {}
        self._Aomega: dict[int, SubLattice] = {}
        self._W = None

    # --- metadata ----------------------------------------------------------

    def meta(self, kind: str, coeff: str = "Z") -> dict:
        d = self.datum
        return {
            "group": f"{d.family}{d.rank}" if d.family != "I2" else f"I2({d.rank})",
            "kind": kind,
            "gamma_convention": GAMMA_CONVENTION,
            "composition_convention": COMPOSITION_CONVENTION,
            "coefficients": coeff,
            "mode": "exact",
        }

    # --- cached operators on A ---------------------------------------------

    def op(self, kind: str, k: int, t: int | None = None) -> ExactMatrix:
        key = (kind, k, t)
        m = self._ops.get(key)
        if m is None:
            m = self.forms.matrix(kind, k, t)
            self._ops[key] = m
        return m

    def _vec(self, x: dict, k: int) -> list[int]:
        return self.alg.to_vector(x, k)

    def _labels(self, k: int) -> list[str]:
        return [self.alg.word_label(w) for w in self.alg.basis(k)]

    # --- the sublattices d(A_k) and A_k omega -------------------------------

    def d_image_words(self, k: int) -> list[Word]:
        """Decreasing words (t1 > ... > tk) that continue to a factorization
        of gamma whose remaining letters increase from tk upwards."""
        alg = self.alg
        lat = alg.lattice
        d = self.datum
        out = []
        for word in alg.basis(k):
            if k == self.n:
                out.append(word)
                continue
            rest = d.mul(d.inv(d.product(word)), lat.gamma)
            inc = lat._rex_any(rest)
            inc = [r for r in inc if all(a < b for a, b in zip(r, r[1:]))]
            if len(inc) != 1:
                raise ArithmeticError("interval lacks a unique increasing chain")
            if not k or inc[0][0] > word[-1]:
                out.append(word)
        return out

    def d_image(self, k: int) -> tuple[list[Word], SubLattice]:
        """Basis {d(a_w)} of d(A_k) inside A_{k-1}, for 1 <= k <= n."""
        hit = self._dA.get(k)
        if hit is None:
            words = self.d_image_words(k)
            vecs = [self._vec(self.forms.d_word(w), k - 1) for w in words]
            hit = (words, SubLattice(vecs, len(self.alg.basis(k - 1))))
            self._dA[k] = hit
        return hit

    def a_omega(self, k: int) -> SubLattice:
        """Z-basis of A_k omega inside A_{k+1}, 0 <= k <= n-1."""
        hit = self._Aomega.get(k)
        if hit is None:
            dim = len(self.alg.basis(k + 1))
            m = self.op("r_omega", k)
            cols = m.transpose().to_dense() if m.nrows else []
            hit = SubLattice(lattice_basis([c for c in cols if any(c)], dim), dim)
            self._Aomega[k] = hit
        return hit

    def restricted(self, kind: str, k: int, t: int | None = None) -> ExactMatrix:
        """Operators between the sublattices: 'delta_t' or 'delta' from
        d(A_k) to d(A_{k-1}); 'l_t' or 'l_omega' from A_k omega to
        A_{k+1} omega."""
        key = ("restricted", kind, k, t)
        m = self._ops.get(key)
        if m is not None:
            return m
        if kind in ("delta_t", "delta"):
            _, src = self.d_image(k)
            _, tgt = self.d_image(k - 1) if k >= 2 else (None, None)
            op = self.op(kind, k - 1, t)
            m = ExactMatrix(tgt.rank if tgt else 0, src.rank)
            _fill(m, src, tgt, op, "nonzero image below degree zero")
        elif kind in ("l_t", "l_omega"):
            src = self.a_omega(k)
            tgt = self.a_omega(k + 1) if k + 1 <= self.n - 1 else None
            op = self.op(kind, k + 1, t)
            m = ExactMatrix(tgt.rank if tgt else 0, src.rank)
            _fill(m, src, tgt, op, "nonzero image above the top degree")
        else:
            raise ValueError(kind)
        self._ops[key] = m
        return m

    # --- the group algebra ---------------------------------------------------

    def group_data(self):
        if self._W is None:
            els = self.datum.elements()
            idx = {w: i for i, w in enumerate(els)}
            right = [[idx[self.datum.mul(w, self.datum.refl(t))] for w in els] for t in range(self.datum.nrefl)]
            self._W = (els, idx, right)
        return self._W

    def _guard(self) -> None:
        if self.size_guard is None:
            return
        size = self.datum.order() * self.alg.total_rank()
        if size > self.size_guard:
            raise ResourceError(
                f"|W| * rank = {size} exceeds the size guard {self.size_guard}; "
                "use the relative complexes with module coefficients instead"
            )

    def _zw_sum(self, mats: dict[int, ExactMatrix]) -> ExactMatrix:
        """sum_t (w -> w t) (x) mats[t]."""
        els, _, right = self.group_data()
        first = next(iter(mats.values()))
        rows, cols = first.shape
        out = ExactMatrix(len(els) * rows, len(els) * cols)
        for t, m in mats.items():
            perm = right[t]
            for wi in range(len(els)):
                ro, co = perm[wi] * rows, wi * cols
                for r, row in m.rows.items():
                    orow = out.rows.setdefault(ro + r, {})
                    for c, v in row.items():
                        key = co + c
                        nv = orow.get(key, 0) + v
                        if nv:
                            orow[key] = nv
                        else:
                            del orow[key]
        out.rows = {r: row for r, row in out.rows.items() if row}
        return out

    def _zw_id(self, m: ExactMatrix) -> ExactMatrix:
        """1 (x) m on ZW (x) X."""
        nw = len(self.group_data()[0])
        out = ExactMatrix(nw * m.nrows, nw * m.ncols)
        for wi in range(nw):
            for r, row in m.rows.items():
                out.rows[wi * m.nrows + r] = {wi * m.ncols + c: v for c, v in row.items()}
        return out

    def _zw_labels(self, labels: list[str]) -> list[str]:
        els = self.group_data()[0]
        return [f"{self.datum.label(w)}⊗{x}" for w in els for x in labels]

    # --- complexes on A --------------------------------------------------------

    def complex_A(self, kind: str) -> ChainComplex:
        """(A, d), (A, delta) as chain complexes; (A, r_omega), (A, l_omega)
        as cochain complexes."""
        n = self.n
        terms = {k: BasedModule(self._labels(k)) for k in range(n + 1)}
        if kind in ("d", "delta"):
            bds = {k: self.op(kind, k) for k in range(1, n + 1)}
            return ChainComplex("chain", terms, bds, f"A,{kind}", self.meta(f"A/{kind}"))
        if kind in ("r_omega", "l_omega"):
            bds = {k: self.op(kind, k) for k in range(n)}
            return ChainComplex("cochain", terms, bds, f"A,{kind}", self.meta(f"A/{kind}"))
        raise ValueError(f"unknown kind {kind!r}")

    def complex_ZWA(self, kind: str) -> ChainComplex:
        """The four auxiliary complexes on ZW (x) A."""
        self._guard()
        n, N = self.n, self.datum.nrefl
        terms = {k: BasedModule(self._zw_labels(self._labels(k))) for k in range(n + 1)}
        if kind == "par1":
            bds = {k: self._zw_sum({t: self.op("delta_t", k, t) for t in range(N)}) for k in range(1, n + 1)}
            direction = "chain"
        elif kind == "par2":
            bds = {k: self._zw_id(self.op("d", k)) for k in range(1, n + 1)}
            direction = "chain"
        elif kind == "l_sigma":
            bds = {k: self._zw_sum({t: self.op("l_t", k, t) for t in range(N)}) for k in range(n)}
            direction = "cochain"
        elif kind == "r_varsigma":
            bds = {k: self._zw_id(self.op("r_omega", k)) for k in range(n)}
            direction = "cochain"
        else:
            raise ValueError(f"unknown kind {kind!r}")
        return ChainComplex(direction, terms, bds, f"ZW⊗A,{kind}", self.meta(f"ZW⊗A/{kind}"))

    # --- space-level complexes ------------------------------------------------

    def complex_space(self, space: str) -> ChainComplex:
        """Chain complexes computing the homology of M, F, M/W, F/W."""
        n, N = self.n, self.datum.nrefl
        space = _space_key(space)
        if space == "MmodW":
            terms = {k: BasedModule(self._labels(k)) for k in range(n + 1)}
            bds = {k: self.op("delta", k) + self.op("d", k).scaled((-1) ** k) for k in range(1, n + 1)}
        elif space == "FmodW":
            terms = {k - 1: BasedModule([f"d({self.alg.word_label(w)})" for w in self.d_image(k)[0]]) for k in range(1, n + 1)}
            bds = {k - 1: self.restricted("delta", k) for k in range(2, n + 1)}
        elif space == "M":
            self._guard()
            terms = {k: BasedModule(self._zw_labels(self._labels(k))) for k in range(n + 1)}
            bds = {}
            for k in range(1, n + 1):
                p1 = self._zw_sum({t: self.op("delta_t", k, t) for t in range(N)})
                bds[k] = p1 + self._zw_id(self.op("d", k)).scaled((-1) ** k)
        elif space == "F":
            self._guard()
            terms = {
                k - 1: BasedModule(self._zw_labels([f"d({self.alg.word_label(w)})" for w in self.d_image(k)[0]]))
                for k in range(1, n + 1)
            }
            bds = {k - 1: self._zw_sum({t: self.restricted("delta_t", k, t) for t in range(N)}) for k in range(2, n + 1)}
        else:
            raise ValueError(space)
        return ChainComplex("chain", terms, bds, f"{space},chain", self.meta(space))

    def cocomplex_space(self, space: str) -> ChainComplex:
        """Cochain complexes computing the cohomology of M, F, M/W, F/W."""
        n, N = self.n, self.datum.nrefl
        space = _space_key(space)
        if space == "MmodW":
            terms = {k: BasedModule(self._labels(k)) for k in range(n + 1)}
            bds = {k: self.op("l_omega", k) - self.op("r_omega", k).scaled((-1) ** k) for k in range(n)}
        elif space == "FmodW":
            terms = {k: BasedModule([f"ω-basis[{i}]" for i in range(self.a_omega(k).rank)]) for k in range(n)}
            bds = {k: self.restricted("l_omega", k) for k in range(n - 1)}
        elif space == "M":
            self._guard()
            terms = {k: BasedModule(self._zw_labels(self._labels(k))) for k in range(n + 1)}
            bds = {}
            for k in range(n):
                ls = self._zw_sum({t: self.op("l_t", k, t) for t in range(N)})
                bds[k] = ls - self._zw_id(self.op("r_omega", k)).scaled((-1) ** k)
        elif space == "F":
            self._guard()
            terms = {
                k: BasedModule(self._zw_labels([f"ω-basis[{i}]" for i in range(self.a_omega(k).rank)])) for k in range(n)
            }
            bds = {k: self._zw_sum({t: self.restricted("l_t", k, t) for t in range(N)}) for k in range(n - 1)}
        else:
            raise ValueError(space)
        return ChainComplex("cochain", terms, bds, f"{space},cochain", self.meta(space))

    # --- module coefficients ----------------------------------------------------

    def relative_complex(self, module, kind: str) -> ChainComplex:
        """C(U), K(U) and their duals C*(U), K*(U) over Q for a right module U."""
        n, N = self.n, self.datum.nrefl
        if module.datum_key != _datum_key(self.datum):
            raise ValueError("module is defined over a different group")
        rt = [module.column_operator(self.datum.refl(t)) for t in range(N)]
        # clear denominators once: every boundary gets the same nonzero
        # factor, which leaves kernels and images unchanged
        scale = 1
        for m in rt:
            for row in m:
                for x in row:
                    scale = lcm(scale, Fraction(x).denominator)
        rt = [[[int(x * scale) for x in row] for row in m] for m in rt]
        ident = [[scale * int(i == j) for j in range(module.dim)] for i in range(module.dim)]

        def tsum(mats):
            out = None
            for t, m in mats.items():
                term = kron(rt[t], m)
                out = term if out is None else out + term
            return out

        def ulabels(labels):
            return [f"u{i}⊗{x}" for i in range(module.dim) for x in labels]

        if kind == "C":
            terms = {k: BasedModule(ulabels(self._labels(k))) for k in range(n + 1)}
            bds = {
                k: tsum({t: self.op("delta_t", k, t) for t in range(N)}) + kron(ident, self.op("d", k)).scaled((-1) ** k)
                for k in range(1, n + 1)
            }
            direction = "chain"
        elif kind == "K":
            terms = {
                k - 1: BasedModule(ulabels([f"d({self.alg.word_label(w)})" for w in self.d_image(k)[0]]))
                for k in range(1, n + 1)
            }
            bds = {k - 1: tsum({t: self.restricted("delta_t", k, t) for t in range(N)}) for k in range(2, n + 1)}
            direction = "chain"
        elif kind == "Cstar":
            terms = {k: BasedModule(ulabels(self._labels(k))) for k in range(n + 1)}
            bds = {
                k: tsum({t: self.op("l_t", k, t) for t in range(N)}) - kron(ident, self.op("r_omega", k)).scaled((-1) ** k)
                for k in range(n)
            }
            direction = "cochain"
        elif kind == "Kstar":
            terms = {
                k: BasedModule(ulabels([f"ω-basis[{i}]" for i in range(self.a_omega(k).rank)])) for k in range(n)
            }
            bds = {k: tsum({t: self.restricted("l_t", k, t) for t in range(N)}) for k in range(n - 1)}
            direction = "cochain"
        else:
            raise ValueError(f"unknown kind {kind!r}")
        for k in list(bds):
            if bds[k] is None:
                del bds[k]
        meta = self.meta(f"{kind}({module.name})", "Q")
        meta["boundary_scale"] = scale
        return ChainComplex(direction, terms, bds, f"{kind}({module.name})", meta)

    # --- the ideal quotients -------------------------------------------------------

    def ideal_quotient_report(self, which: str = "FmodW") -> list[dict]:
        """(Aω ∩ ωA)/ωAω degreewise, or its ZW (x) A analogue with σ and ς.

        Entry k describes the slice inside degree k+1 and is compared with
        the degree-k cohomology."""
        which = _space_key(which)
        n, N = self.n, self.datum.nrefl
        out = []
        for k in range(n):
            if which == "FmodW":
                dim = len(self.alg.basis(k + 1))
                right = _columns(self.op("r_omega", k))
                left = _columns(self.op("l_omega", k))
                if k >= 1:
                    sand = self.op("l_omega", k) @ self.op("r_omega", k - 1)
                    inner = _columns(sand)
                else:
                    inner = []
            elif which == "F":
                self._guard()
                nw = len(self.group_data()[0])
                dim = nw * len(self.alg.basis(k + 1))
                ls = {j: self._zw_sum({t: self.op("l_t", j, t) for t in range(N)}) for j in (k, k - 1) if j >= 0}
                rs = {j: self._zw_id(self.op("r_omega", j)) for j in (k, k - 1) if j >= 0}
                right = _columns(rs[k])
                left = _columns(ls[k])
                inner = _columns(ls[k] @ rs[k - 1]) if k >= 1 else []
            else:
                raise ValueError(which)
            a = lattice_basis([c for c in right if any(c)], dim)
            b = lattice_basis([c for c in left if any(c)], dim)
            inter = intersect_lattices(a, b, dim)
            small = lattice_basis([c for c in inner if any(c)], dim)
            free, tors = quotient_invariants(inter, small)
            out.append({"degree": k, "free_rank": free, "torsion": list(tors)})
        return out


def _apply(m: ExactMatrix, v: list[int]) -> list[int]:
    out = [0] * m.nrows
    for r, row in m.rows.items():
        out[r] = sum(c * v[j] for j, c in row.items())
    return out


def _columns(m: ExactMatrix) -> list[list[int]]:
    return m.transpose().to_dense() if m.ncols else []


def _space_key(space: str) -> str:
    key = space.replace("/", "mod").replace("-", "").replace("_", "")
    key = {"Mmodw": "MmodW", "Fmodw": "FmodW"}.get(key, key)
    if key not in ("M", "F", "MmodW", "FmodW"):
        raise ValueError(f"unknown space {space!r}; expected M, F, M/W or F/W")
    return key


def _datum_key(datum) -> tuple:
    return (datum.family, datum.rank)


def builder_of(alg: NcAlgebra) -> ComplexBuilder:
    b = getattr(alg, "_builder", None)
    if b is None:
        b = ComplexBuilder(alg)
        alg._builder = b
    return b


def complex_A(alg: NcAlgebra, kind: str) -> ChainComplex:
    return builder_of(alg).complex_A(kind)


def complex_space(alg: NcAlgebra, space: str) -> ChainComplex:
    return builder_of(alg).complex_space(space)


def cocomplex_space(alg: NcAlgebra, space: str) -> ChainComplex:
    return builder_of(alg).cocomplex_space(space)


def complex_ZWA(alg: NcAlgebra, kind: str) -> ChainComplex:
    return builder_of(alg).complex_ZWA(kind)


def relative_complex(alg: NcAlgebra, module, kind: str) -> ChainComplex:
    return builder_of(alg).relative_complex(module, kind)


def ideal_quotient_report(alg: NcAlgebra, which: str = "FmodW") -> list[dict]:
    return builder_of(alg).ideal_quotient_report(which)
