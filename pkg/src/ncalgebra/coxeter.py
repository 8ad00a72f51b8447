"""Finite Coxeter groups of types A, B, D and I2(m).

Types A, B and D are realized by signed permutations of the standard
coordinate vectors, so all root arithmetic is exact. Dihedral groups are
handled combinatorially: elements are rotations and reflections indexed
mod m.

Products compose right to left: ``mul(u, v)`` is the map x -> u(v(x)),
which matches the product of the corresponding matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

Element = tuple  # hashable canonical form of a group element
Vector = tuple  # exact-rational coordinate vector

COMPOSITION_CONVENTION = "right-to-left: (uv)(x) = u(v(x))"
GAMMA_CONVENTION = "bipartite: product over the colour class of the first simple root, then the other class"


class ConfigurationError(ValueError):
    """Unsupported family/rank combination."""


class SignedPermGroup:
    """Signed permutations of e_1..e_d.

    An element ``w`` is a tuple with ``w[i] = s*(j+1)`` meaning
    ``w(e_i) = s*e_j``. Type A uses only positive entries.
    """

    def __init__(self, dim: int, family: str):
        self.dim = dim
        self.family = family

    @property
    def identity(self) -> Element:
        return tuple(range(1, self.dim + 1))

    def mul(self, u: Element, v: Element) -> Element:
        return tuple(u[x - 1] if x > 0 else -u[-x - 1] for x in v)

    def inv(self, w: Element) -> Element:
        out = [0] * self.dim
        for i, x in enumerate(w):
            if x > 0:
                out[x - 1] = i + 1
            else:
                out[-x - 1] = -(i + 1)
        return tuple(out)

    def act(self, w: Element, v: Vector) -> Vector:
        out = [0] * self.dim
        for i, x in enumerate(w):
            if x > 0:
                out[x - 1] = v[i]
            else:
                out[-x - 1] = -v[i]
        return tuple(out)

    def positive_cycles(self, w: Element) -> int:
        """Number of cycles of |w| whose sign product is +1."""
        seen = [False] * self.dim
        count = 0
        for i in range(self.dim):
            if seen[i]:
                continue
            sign = 1
            j = i
            while not seen[j]:
                seen[j] = True
                x = w[j]
                sign *= 1 if x > 0 else -1
                j = abs(x) - 1
            if sign > 0:
                count += 1
        return count

    def matrix(self, w: Element) -> list[list[int]]:
        m = [[0] * self.dim for _ in range(self.dim)]
        for i, x in enumerate(w):
            m[abs(x) - 1][i] = 1 if x > 0 else -1
        return m

    def label(self, w: Element) -> str:
        if self.family == "A":
            return cycle_notation(w)
        return "[" + " ".join(str(x) for x in w) + "]"


class DihedralGroup:
    """The dihedral group of order 2m.

    ``(0, k)`` is the rotation r^k and ``(1, k)`` the reflection r^k s, so
    the reflection t_i of the standard labelling is ``(1, i-1)``.
    """

    def __init__(self, m: int):
        self.m = m
        self.family = "I2"

    @property
    def identity(self) -> Element:
        return (0, 0)

    def mul(self, u: Element, v: Element) -> Element:
        f, a = u
        g, b = v
        return (f ^ g, (a + (b if f == 0 else -b)) % self.m)

    def inv(self, w: Element) -> Element:
        f, a = w
        return w if f else (0, (-a) % self.m)

    def label(self, w: Element) -> str:
        f, a = w
        if f:
            return f"t{a + 1}"
        return "e" if a == 0 else f"r^{a}"


def cycle_notation(w: Element) -> str:
    """Cycle notation (1-based) of a permutation stored one-line."""
    n = len(w)
    seen = [False] * n
    parts = []
    for i in range(n):
        if seen[i] or w[i] == i + 1:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(str(j + 1))
            j = w[j] - 1
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) or "e"


def perm_from_cycles(n: int, *cycles) -> Element:
    """One-line tuple of a permutation of {1..n} given 1-based cycles."""
    w = list(range(1, n + 1))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            w[a - 1] = b
    return tuple(w)


class Reflection(NamedTuple):
    index: int  # 1-based position in the Steinberg order
    root: Vector | None
    element: Element


def _dot(u: Vector, v: Vector) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _is_positive(v: Vector) -> bool:
    for x in v:
        if x:
            return x > 0
    raise ValueError("zero vector")


@dataclass(eq=False)
class CoxeterDatum:
    family: str
    rank: int
    group: object
    simple_roots: list | None
    pi1: list[int]
    pi2: list[int]
    positive_roots: list | None
    coxeter_number: int
    gamma: Element
    reflections: list[Reflection]
    exponents: list[int]
    simple_reflections: list[Element]
    index_of: dict = field(default_factory=dict)
    theta: list[list[Fraction]] | None = None
    _elements: list | None = None

    # --- group arithmetic ------------------------------------------------

    @property
    def identity(self) -> Element:
        return self.group.identity

    @property
    def nrefl(self) -> int:
        return len(self.reflections)

    def mul(self, *ws: Element) -> Element:
        out = self.group.identity
        for w in ws:
            out = self.group.mul(out, w)
        return out

    def inv(self, w: Element) -> Element:
        return self.group.inv(w)

    def refl(self, i: int) -> Element:
        """Group element of the reflection with 0-based Steinberg index i."""
        return self.reflections[i].element

    def conj(self, u: Element, w: Element) -> Element:
        """u^w = w^-1 u w."""
        g = self.group
        return g.mul(g.inv(w), g.mul(u, w))

    def conj_index(self, i: int, j: int) -> int:
        """Index of t_i^{t_j} = t_j t_i t_j."""
        g = self.group
        tj = self.reflections[j].element
        return self.index_of[g.mul(tj, g.mul(self.reflections[i].element, tj))]

    def product(self, word) -> Element:
        """Product t_{w1} t_{w2} ... of reflections given by 0-based indices."""
        g = self.group
        out = g.identity
        for i in word:
            out = g.mul(out, self.reflections[i].element)
        return out

    def absolute_length(self, w: Element) -> int:
        """Reflection length, i.e. the codimension of the fixed space."""
        if self.family == "I2":
            f, a = w
            return 1 if f else (0 if a == 0 else 2)
        g = self.group
        return g.dim - g.positive_cycles(w)

    def coxeter_length(self, w: Element) -> int:
        """Length in the simple generators."""
        if self.family == "I2":
            m = self.group.m
            f, a = w
            if f:
                return min(2 * a + 1, 2 * m - 2 * a - 1)
            return min(2 * a, 2 * (m - a))
        if self.family == "A":
            return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])
        g = self.group
        return sum(1 for r in self.positive_roots if not _is_positive(g.act(w, r)))

    def matrix(self, w: Element) -> list[list[int]]:
        if self.family == "I2":
            raise ConfigurationError("dihedral groups are modelled without coordinates")
        return self.group.matrix(w)

    def elements(self) -> list[Element]:
        """All group elements, sorted by their canonical tuples."""
        if self._elements is None:
            g = self.group
            seen = {g.identity}
            frontier = [g.identity]
            while frontier:
                nxt = []
                for w in frontier:
                    for s in self.simple_reflections:
                        u = g.mul(w, s)
                        if u not in seen:
                            seen.add(u)
                            nxt.append(u)
                frontier = nxt
            self._elements = sorted(seen)
        return self._elements

    def order(self) -> int:
        return len(self.elements())

    def label(self, w: Element) -> str:
        return self.group.label(w)

    def refl_label(self, i: int) -> str:
        if self.family == "I2":
            return f"t{i + 1}"
        return self.group.label(self.reflections[i].element)

    def theta_pair(self, i: int, j: int) -> Fraction:
        """(theta(rho_i), rho_j) for 0-based Steinberg indices,
        where theta is the inverse of gamma - 1 on the reflection
        representation."""
        if self.theta is None:
            raise ConfigurationError("theta needs root coordinates; dihedral groups have none")
        return self.theta[i][j]

    def describe(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "order": self.order(),
            "coxeter_number": self.coxeter_number,
            "reflections": self.nrefl,
            "exponents": self.exponents,
            "gamma": self.label(self.gamma),
            "steinberg_order": [self.refl_label(i) for i in range(self.nrefl)],
            "gamma_convention": GAMMA_CONVENTION,
            "composition_convention": COMPOSITION_CONVENTION,
        }


def _simple_roots(family: str, n: int) -> tuple[int, list[Vector]]:
    def e(i, dim):
        return tuple(Fraction(int(k == i)) for k in range(dim))

    def sub(u, v):
        return tuple(a - b for a, b in zip(u, v))

    def add(u, v):
        return tuple(a + b for a, b in zip(u, v))

    if family == "A":
        dim = n + 1
        return dim, [sub(e(i, dim), e(i + 1, dim)) for i in range(n)]
    dim = n
    roots = [sub(e(i, dim), e(i + 1, dim)) for i in range(n - 1)]
    if family == "B":
        roots.append(e(n - 1, dim))
    else:
        roots.append(add(e(n - 2, dim), e(n - 1, dim)))
    return dim, roots


def _reflection_element(group: SignedPermGroup, root: Vector) -> Element:
    rr = _dot(root, root)
    w = []
    for k in range(group.dim):
        img = [Fraction(int(i == k)) - 2 * root[k] / rr * root[i] for i in range(group.dim)]
        nz = [i for i, x in enumerate(img) if x]
        assert len(nz) == 1 and abs(img[nz[0]]) == 1, "reflection is not monomial"
        i = nz[0]
        w.append((i + 1) if img[i] > 0 else -(i + 1))
    return tuple(w)


def _bipartition(roots: list[Vector]) -> tuple[list[int], list[int]]:
    """2-colour the Coxeter graph; the first node of each component gets colour 1."""
    n = len(roots)
    colour = [None] * n
    for start in range(n):
        if colour[start] is not None:
            continue
        colour[start] = 1
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and _dot(roots[i], roots[j]) != 0:
                    if colour[j] is None:
                        colour[j] = 3 - colour[i]
                        stack.append(j)
                    elif colour[j] == colour[i]:
                        raise ConfigurationError("Coxeter graph is not bipartite")
    return [i for i in range(n) if colour[i] == 1], [i for i in range(n) if colour[i] == 2]


def _exponents(family: str, n: int) -> list[int]:
    if family == "A":
        return list(range(1, n + 1))
    if family == "B":
        return list(range(1, 2 * n, 2))
    if family == "D":
        return sorted(list(range(1, 2 * n - 2, 2)) + [n - 1])
    return [1, n - 1]


def build_coxeter(family: str, rank: int) -> CoxeterDatum:
    """Build the Coxeter datum of type A_n, B_n, D_n or I2(m)."""
    family = family.upper()
    if family == "I2":
        return _build_dihedral(rank)
    if family not in ("A", "B", "D"):
        raise ConfigurationError(f"unsupported family {family!r}; expected one of A, B, D, I2")
    if rank < 1 or (family == "B" and rank < 2) or (family == "D" and rank < 2):
        raise ConfigurationError(f"type {family} needs rank >= {1 if family == 'A' else 2}, got {rank}")

    dim, simple = _simple_roots(family, rank)
    group = SignedPermGroup(dim, family)
    pi1, pi2 = _bipartition(simple)
    sref = [_reflection_element(group, a) for a in simple]
    gamma = group.identity
    for i in pi1 + pi2:
        gamma = group.mul(gamma, sref[i])

    h = 1
    w = gamma
    while w != group.identity:
        w = group.mul(w, gamma)
        h += 1

    ordered = [simple[i] for i in pi1 + pi2]
    l1 = len(pi1)
    npos = rank * h // 2
    roots: list[Vector] = []
    for k in range(npos):
        if k < l1:
            r = ordered[k]
        elif k < rank:
            r = tuple(-x for x in group.act(gamma, ordered[k]))
        else:
            r = group.act(gamma, roots[k - rank])
        roots.append(r)
    if len(set(roots)) != npos or not all(_is_positive(r) for r in roots):
        raise ArithmeticError("root recursion did not enumerate the positive roots")

    refls = [Reflection(k + 1, r, _reflection_element(group, r)) for k, r in enumerate(roots)]
    datum = CoxeterDatum(
        family=family,
        rank=rank,
        group=group,
        simple_roots=simple,
        pi1=pi1,
        pi2=pi2,
        positive_roots=roots,
        coxeter_number=h,
        gamma=gamma,
        reflections=refls,
        exponents=_exponents(family, rank),
        simple_reflections=sref,
    )
    datum.index_of = {t.element: t.index - 1 for t in refls}
    datum.theta = _theta_table(datum)
    return datum


def _build_dihedral(m: int) -> CoxeterDatum:
    if m < 3:
        raise ConfigurationError(f"I2(m) needs m >= 3, got {m}")
    group = DihedralGroup(m)
    refls = [Reflection(i + 1, None, (1, i)) for i in range(m)]
    s1, s2 = (1, 0), (1, m - 1)
    datum = CoxeterDatum(
        family="I2",
        rank=m,
        group=group,
        simple_roots=None,
        pi1=[0],
        pi2=[1],
        positive_roots=None,
        coxeter_number=m,
        gamma=group.mul(s1, s2),
        reflections=refls,
        exponents=_exponents("I2", m),
        simple_reflections=[s1, s2],
    )
    datum.index_of = {t.element: t.index - 1 for t in refls}
    return datum


def _solve_square(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    n = len(a)
    m = [list(a[i]) + [b[i]] for i in range(n)]
    for c in range(n):
        p = next(i for i in range(c, n) if m[i][c])
        m[c], m[p] = m[p], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [m[i][n] for i in range(n)]


def _theta_table(datum: CoxeterDatum) -> list[list[Fraction]]:
    """Matrix of (theta(rho_i), rho_j) in Steinberg order.

    Work in simple-root coordinates so that gamma - 1 is invertible (in
    type A the ambient space contains the fixed line of all-ones).
    """
    simple = datum.simple_roots
    n = len(simple)
    gram = [[_dot(a, b) for b in simple] for a in simple]

    def coords(v: Vector) -> list[Fraction]:
        return _solve_square(gram, [_dot(a, v) for a in simple])

    g = datum.group
    gamma_cols = [coords(g.act(datum.gamma, a)) for a in simple]
    gm1 = [[gamma_cols[j][i] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    table = []
    for ri in datum.positive_roots:
        th = _solve_square(gm1, coords(ri))
        th_vec = tuple(sum((th[k] * simple[k][x] for k in range(n)), Fraction(0)) for x in range(len(ri)))
        table.append([_dot(th_vec, rj) for rj in datum.positive_roots])
    return table


def steinberg_order(datum: CoxeterDatum) -> list[Reflection]:
    return list(datum.reflections)


def absolute_length(datum: CoxeterDatum, w: Element) -> int:
    return datum.absolute_length(w)


def coxeter_length(datum: CoxeterDatum, w: Element) -> int:
    return datum.coxeter_length(w)


def theta_pair(datum: CoxeterDatum, i: int, j: int) -> Fraction:
    return datum.theta_pair(i, j)


def parse_group(name: str) -> tuple[str, int]:
    """Parse 'A3', 'B2', 'D4', 'I2(5)' or 'Sym4' into (family, rank)."""
    s = name.strip().replace(" ", "")
    if s.lower().startswith("sym"):
        return "A", int(s[3:]) - 1
    if s.upper().startswith("I2"):
        inner = s[2:].strip("()")
        return "I2", int(inner)
    return s[0].upper(), int(s[1:])
