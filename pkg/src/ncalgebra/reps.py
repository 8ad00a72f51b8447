"""Right modules of Coxeter groups and the multiplicity tables.

Specht modules of Sym(N) are realized over Q by Young's seminormal form.
Matrices are homomorphic, R(uv) = R(u) R(v), and a right module acts on
row vectors: u . w = u R(w).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .algebra import NcAlgebra
from .complexes import builder_of
from .coxeter import CoxeterDatum, build_coxeter
from .homology import homology

Matrix = list[list[Fraction]]


# --- partitions ---------------------------------------------------------------


def partitions(n: int) -> list[tuple[int, ...]]:
    """Partitions of n in reverse lexicographic order."""
    out = []

    def rec(rem, maxpart, prefix):
        if rem == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(rem, maxpart), 0, -1):
            rec(rem - p, p, prefix + [p])

    rec(n, n, [])
    return out


def conjugate(lam: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0])) if lam else ()


def validate_partition(lam, n: int) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if any(x <= 0 for x in lam) or any(a < b for a, b in zip(lam, lam[1:])) or sum(lam) != n:
        raise ValueError(f"{lam} is not a partition of {n}")
    return lam


def format_partition(lam: tuple[int, ...]) -> str:
    """Compact exponent notation, e.g. (2,1,1,1) -> (2,1³)."""
    sup = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
    parts = []
    i = 0
    while i < len(lam):
        j = i
        while j < len(lam) and lam[j] == lam[i]:
            j += 1
        mult = j - i
        parts.append(str(lam[i]) + (str(mult).translate(sup) if mult > 1 else ""))
        i = j
    return "(" + ",".join(parts) + ")"


def parse_partition(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.strip("()[] ").replace(" ", "").split(",") if x)


def standard_tableaux(lam: tuple[int, ...]) -> list[tuple[tuple[int, int], ...]]:
    """Standard tableaux as tuples pos[m] = (row, col) of entry m+1."""
    out = []
    n = sum(lam)

    def rec(filled, pos):
        if len(pos) == n:
            out.append(tuple(pos))
            return
        for r in range(len(lam)):
            c = filled[r]
            if c < lam[r] and (r == 0 or filled[r - 1] > c):
                filled[r] += 1
                rec(filled, pos + [(r, c)])
                filled[r] -= 1

    rec([0] * len(lam), [])
    return out


# --- modules ------------------------------------------------------------------


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(m)) for j in range(p)] for i in range(n)]


def _identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


@dataclass
class RightModule:
    name: str
    datum: CoxeterDatum
    generators: list[Matrix]
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.generators[0]) if self.generators else 0

    @property
    def datum_key(self) -> tuple:
        return (self.datum.family, self.datum.rank)

    def reduced_word(self, w) -> list[int]:
        """Simple-reflection indices i1..ik with w = s_i1 ... s_ik."""
        d = self.datum
        word = []
        length = d.coxeter_length(w)
        while length:
            for i, s in enumerate(d.simple_reflections):
                u = d.mul(w, s)
                lu = d.coxeter_length(u)
                if lu < length:
                    word.append(i)
                    w, length = u, lu
                    break
        return word[::-1]

    def matrix(self, w) -> Matrix:
        hit = self._cache.get(w)
        if hit is None:
            hit = _identity(self.dim)
            for i in self.reduced_word(w):
                hit = _matmul(hit, self.generators[i])
            self._cache[w] = hit
        return hit

    def column_operator(self, w) -> Matrix:
        """Matrix of u -> u.w acting on coordinate columns."""
        m = self.matrix(w)
        return [list(col) for col in zip(*m)]

    def verify(self) -> bool:
        """Involutions and braid relations (checked via the group's own
        products of the simple reflections)."""
        d = self.datum
        gens = self.generators
        ident = _identity(self.dim)
        for i, g in enumerate(gens):
            if _matmul(g, g) != ident:
                return False
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                st = d.mul(d.simple_reflections[i], d.simple_reflections[j])
                order, w = 1, st
                while w != d.identity:
                    w = d.mul(w, st)
                    order += 1
                left = ident
                for _ in range(order):
                    left = _matmul(left, _matmul(gens[i], gens[j]))
                if left != ident:
                    return False
        return True


def trivial_module(datum: CoxeterDatum) -> RightModule:
    one = [[Fraction(1)]]
    return RightModule("trivial", datum, [one for _ in datum.simple_reflections])


def sign_module(datum: CoxeterDatum) -> RightModule:
    neg = [[Fraction(-1)]]
    return RightModule("sign", datum, [neg for _ in datum.simple_reflections])


def tensor_sign(u: RightModule) -> RightModule:
    return RightModule(f"{u.name}⊗sign", u.datum, [[[-x for x in row] for row in g] for g in u.generators])


def regular_module(datum: CoxeterDatum) -> RightModule:
    """Z W as a right module, basis in the sorted element order."""
    els = datum.elements()
    idx = {w: i for i, w in enumerate(els)}
    gens = []
    for s in datum.simple_reflections:
        m = [[Fraction(0)] * len(els) for _ in els]
        for w in els:
            m[idx[w]][idx[datum.mul(w, s)]] = Fraction(1)
        gens.append(m)
    return RightModule("regular", datum, gens)


@lru_cache(maxsize=None)
def _seminormal(lam: tuple[int, ...]) -> tuple:
    tabs = standard_tableaux(lam)
    index = {t: i for i, t in enumerate(tabs)}
    n = sum(lam)
    dim = len(tabs)
    gens = []
    for i in range(n - 1):
        m = [[Fraction(0)] * dim for _ in range(dim)]
        for j, t in enumerate(tabs):
            (ra, ca), (rb, cb) = t[i], t[i + 1]
            r = (cb - rb) - (ca - ra)  # axial distance from i+1 back to i
            m[j][j] = Fraction(1, r)
            if abs(r) > 1:
                swapped = list(t)
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                k = index[tuple(swapped)]
                m[k][j] = Fraction(1) if r > 0 else 1 - Fraction(1, r * r)
        gens.append(tuple(tuple(row) for row in m))
    return tuple(gens)


def specht(n_plus_1: int, lam, datum: CoxeterDatum | None = None) -> RightModule:
    """Specht module S_lambda of Sym(n+1) in seminormal form."""
    lam = validate_partition(lam, n_plus_1)
    if datum is None:
        datum = _sym_datum(n_plus_1)
    if (datum.family, datum.rank) != ("A", n_plus_1 - 1):
        raise ValueError("Specht modules need the type A datum of matching rank")
    gens = [[list(row) for row in g] for g in _seminormal(lam)]
    if n_plus_1 == 1:
        gens = []
    mod = RightModule(format_partition(lam), datum, gens)
    if not mod.verify():
        raise ArithmeticError(f"seminormal matrices for {lam} violate the Coxeter relations")
    return mod


def specht_dim(lam: tuple[int, ...]) -> int:
    return len(standard_tableaux(lam))


@lru_cache(maxsize=None)
def _sym_datum(n_plus_1: int) -> CoxeterDatum:
    return build_coxeter("A", n_plus_1 - 1)


@lru_cache(maxsize=None)
def sym_algebra(n_plus_1: int) -> NcAlgebra:
    return NcAlgebra(_sym_datum(n_plus_1))


# --- multiplicities -------------------------------------------------------------


def multiplicity_vector(alg: NcAlgebra, module: RightModule, space: str = "F", variant: str = "cohomology", modulus=None) -> list[int]:
    """Dimensions of H^k (or H_k) of the relative complex, all degrees."""
    kind = {("F", "cohomology"): "Kstar", ("F", "homology"): "K", ("M", "cohomology"): "Cstar", ("M", "homology"): "C"}[
        (space, variant)
    ]
    cx = builder_of(alg).relative_complex(module, kind)
    res = homology(cx, "Q", modulus=modulus, verify=modulus is None)
    return [res.betti[k] for k in res.degrees]


def multiplicity(alg: NcAlgebra, lam, k: int, space: str = "F", variant: str = "cohomology") -> int:
    n_plus_1 = alg.n + 1
    vec = multiplicity_vector(alg, specht(n_plus_1, lam, alg.datum), space, variant)
    if not 0 <= k < len(vec):
        raise ValueError(f"degree {k} out of range 0..{len(vec) - 1}")
    return vec[k]


@dataclass
class MultiplicityTable:
    group: str
    rows: list[dict]
    poincare: list[int]
    space: str = "F"
    mode: str = "exact"
    flagged_degrees: list[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "space": self.space,
            "rows": self.rows,
            "poincare": self.poincare,
            "mode": self.mode,
            "flagged_degrees": self.flagged_degrees,
        }

    def row_map(self) -> dict[tuple, list[int]]:
        return {tuple(tuple(p) for p in r["partitions"]): r["values"] for r in self.rows}


# degrees where published tables for Sym7 disagree with an earlier computation
LITERATURE_DISAGREEMENT = {7: [5, 6]}


def _row_vector(args) -> list[int]:
    n_plus_1, lam, space, variant, modulus = args
    alg = sym_algebra(n_plus_1)
    return multiplicity_vector(alg, specht(n_plus_1, lam, alg.datum), space, variant, modulus)


def appendix_table(
    n_plus_1: int, space: str = "F", variant: str = "cohomology", modulus=None, jobs: int = 1
) -> MultiplicityTable:
    """Multiplicities of every S_lambda in H^k; for F the rows are merged
    over conjugate pairs, whose equality is asserted.

    With ``jobs > 1`` the partitions are distributed over worker processes;
    rows are assembled in partition order, so the output does not depend
    on scheduling."""
    parts = partitions(n_plus_1)
    tasks = [(n_plus_1, lam, space, variant, modulus) for lam in parts]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            vectors = dict(zip(parts, pool.map(_row_vector, tasks)))
    else:
        vectors = {lam: _row_vector(task) for lam, task in zip(parts, tasks)}
    rows = []
    done = set()
    total = None
    for lam in parts:
        if lam in done:
            continue
        # conjugate rows coincide for F only; M keeps one row per partition
        conj = conjugate(lam) if space == "F" else lam
        vec = vectors[lam]
        if conj != lam:
            other = vectors[conj]
            if other != vec:
                raise ArithmeticError(f"conjugate rows {lam} and {conj} differ: {vec} vs {other}")
            done.add(conj)
        done.add(lam)
        pair = [list(lam)] + ([list(conj)] if conj != lam else [])
        rows.append({"partitions": pair, "values": vec})
        weight = sum(specht_dim(tuple(p)) for p in pair)
        contrib = [weight * v for v in vec]
        total = contrib if total is None else [a + b for a, b in zip(total, contrib)]
    mode = "exact" if modulus is None else f"modular certificate (p={modulus})"
    return MultiplicityTable(f"Sym{n_plus_1}", rows, total or [], space, mode, LITERATURE_DISAGREEMENT.get(n_plus_1, []))


def poincare_polynomial(n_plus_1: int, space: str = "F") -> list[int]:
    return appendix_table(n_plus_1, space).poincare


def exponent_product(exponents: list[int]) -> list[int]:
    """Coefficients of prod_i (1 + m_i t)."""
    poly = [1]
    for m in exponents:
        poly = [a + m * b for a, b in zip(poly + [0], [0] + poly)]
    return poly
