"""The interval [e, gamma] in the absolute order, its reflection
factorizations, and the Hurwitz-action model of the algebra.

Factorizations are tuples of 0-based Steinberg indices; a word
``(i1, ..., ik)`` stands for the product t_{i1} t_{i2} ... t_{ik}.
"""

from __future__ import annotations

from itertools import permutations

from .coxeter import CoxeterDatum, Element
from .homology import ExactMatrix, rank


class DomainError(ValueError):
    pass


class NcpLattice:
    """Noncrossing partition lattice of a Coxeter datum.

    ``gamma`` may be overridden by any group element; by default it is the
    datum's bipartite Coxeter element. The Steinberg order is a reflection
    order compatible with [e, gamma] only when gamma lies below the
    bipartite Coxeter element (``order_compatible``); otherwise decreasing
    factorizations carry no meaning and the Mobius function is computed
    from its recursion.
    """

    def __init__(self, datum: CoxeterDatum, gamma: Element | None = None):
        self.datum = datum
        self.gamma = datum.gamma if gamma is None else gamma
        self.n = datum.absolute_length(self.gamma)
        self._member: dict[Element, bool] = {}
        self._rex: dict[Element, list[tuple[int, ...]]] = {}
        self._dec: dict[tuple[Element, int], list[tuple[int, ...]]] = {}
        self._strata: list[list[Element]] | None = None
        d = datum
        self.order_compatible = d.absolute_length(self.gamma) + d.absolute_length(
            d.mul(d.inv(self.gamma), d.gamma)
        ) == d.absolute_length(d.gamma)

    # --- order -----------------------------------------------------------

    def le(self, u: Element, v: Element) -> bool:
        d = self.datum
        return d.absolute_length(v) == d.absolute_length(u) + d.absolute_length(d.mul(d.inv(u), v))

    def below_gamma(self, w: Element) -> bool:
        hit = self._member.get(w)
        if hit is None:
            d = self.datum
            hit = d.absolute_length(w) + d.absolute_length(d.mul(d.inv(w), self.gamma)) == self.n
            self._member[w] = hit
        return hit

    def strata(self) -> list[list[Element]]:
        """Elements of the lattice grouped by reflection length."""
        if self._strata is None:
            d = self.datum
            layers = [[d.identity]]
            for _ in range(self.n):
                nxt = set()
                for w in layers[-1]:
                    for t in range(d.nrefl):
                        u = d.mul(w, d.refl(t))
                        if u not in nxt and d.absolute_length(u) == len(layers) and self.below_gamma(u):
                            nxt.add(u)
                layers.append(sorted(nxt))
            self._strata = layers
        return self._strata

    def elements(self) -> list[Element]:
        return [w for layer in self.strata() for w in layer]

    # --- factorizations --------------------------------------------------

    def _check(self, w: Element) -> None:
        if not self.below_gamma(w):
            raise DomainError(f"{self.datum.label(w)} is not below gamma")

    def rex(self, w: Element) -> list[tuple[int, ...]]:
        """All reduced reflection factorizations of w, first letters in
        increasing Steinberg order."""
        self._check(w)
        return self._rex_any(w)

    def _rex_any(self, w: Element) -> list[tuple[int, ...]]:
        hit = self._rex.get(w)
        if hit is not None:
            return hit
        d = self.datum
        k = d.absolute_length(w)
        if k == 0:
            out = [()]
        else:
            out = []
            for t in range(d.nrefl):
                rest = d.mul(d.refl(t), w)
                if d.absolute_length(rest) == k - 1:
                    out.extend((t,) + r for r in self._rex_any(rest))
        self._rex[w] = out
        return out

    def decreasing_rex(self, w: Element, below: int | None = None) -> list[tuple[int, ...]]:
        """Strictly decreasing reduced factorizations of w; with ``below``
        all letters are also required to be smaller than that index."""
        if below is None:
            self._check(w)
            below = self.datum.nrefl
        key = (w, below)
        hit = self._dec.get(key)
        if hit is not None:
            return hit
        d = self.datum
        k = d.absolute_length(w)
        if k == 0:
            out = [()]
        else:
            out = []
            for t in range(below - 1, -1, -1):
                rest = d.mul(d.refl(t), w)
                if d.absolute_length(rest) == k - 1:
                    out.extend((t,) + r for r in self.decreasing_rex(rest, t))
        out.sort(reverse=True)
        self._dec[key] = out
        return out

    def increasing_rex(self, w: Element) -> list[tuple[int, ...]]:
        return [r for r in self.rex(w) if all(a < b for a, b in zip(r, r[1:]))]

    def mobius(self, w: Element) -> int:
        """Mobius function mu(e, w), computed as (-1)^k |D_w|."""
        self._check(w)
        if not self.order_compatible:
            return self.mobius_recursive(w)
        k = self.datum.absolute_length(w)
        return (-1) ** k * len(self.decreasing_rex(w))

    def mobius_recursive(self, w: Element) -> int:
        """mu(e, w) from the defining recursion; an independent check."""
        self._check(w)
        below = [u for u in self.elements() if self.le(u, w)]
        below.sort(key=self.datum.absolute_length)
        mu: dict[Element, int] = {}
        for u in below:
            if u == self.datum.identity:
                mu[u] = 1
            else:
                mu[u] = -sum(mu[v] for v in mu if self.le(v, u))
        return mu[w]

    def kreweras(self, w: Element) -> Element:
        """Kreweras complement gamma w^-1."""
        self._check(w)
        d = self.datum
        return d.mul(self.gamma, d.inv(w))


# --- Hurwitz action and the chain model ------------------------------------


def hurwitz_act(datum: CoxeterDatum, i: int, seq: tuple[int, ...], inverse: bool = False) -> tuple[int, ...]:
    """Braid generator sigma_i (1-based) on a reflection sequence.

    (.., t_i, t_{i+1}, ..) -> (.., t_{i+1}, t_i^{t_{i+1}}, ..); the inverse
    sends it to (.., t_{i+1}^{t_i}, t_i, ..).
    """
    if not 1 <= i < len(seq):
        raise IndexError(f"braid generator {i} out of range for length {len(seq)}")
    a, b = seq[i - 1], seq[i]
    if inverse:
        pair = (datum.conj_index(b, a), a)
    else:
        pair = (b, datum.conj_index(a, b))
    return seq[: i - 1] + pair + seq[i + 1 :]


def _reduced_word(perm: tuple[int, ...]) -> list[int]:
    """Adjacent transpositions (1-based) whose product sorts ``perm``, via bubble sort."""
    p = list(perm)
    word = []
    changed = True
    while changed:
        changed = False
        for i in range(len(p) - 1):
            if p[i] > p[i + 1]:
                p[i], p[i + 1] = p[i + 1], p[i]
                word.append(i + 1)
                changed = True
    return word[::-1]


def _sign(perm: tuple[int, ...]) -> int:
    inv = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def beta(lat: NcpLattice, seq: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """beta_seq = sum over pi in Sym_k of sgn(pi) pi.seq, each pi lifted
    to the braid group along a reduced word."""
    d = lat.datum
    k = len(seq)
    if d.absolute_length(d.product(seq)) != k:
        raise DomainError("sequence is not reduced")
    out: dict[tuple[int, ...], int] = {}
    for perm in permutations(range(k)):
        s = seq
        for g in reversed(_reduced_word(perm)):
            s = hurwitz_act(d, g, s)
        out[s] = out.get(s, 0) + _sign(perm)
    return {s: c for s, c in out.items() if c}


def beta_and_z(lat: NcpLattice, seq: tuple[int, ...]):
    """beta_seq and z_seq = sum_i (-1)^(k-i) beta of seq with entry i removed."""
    b = beta(lat, seq)
    k = len(seq)
    z: dict[tuple[int, ...], int] = {}
    for i in range(k):
        sub = seq[:i] + seq[i + 1 :]
        sign = (-1) ** (k - 1 - i)
        for s, c in beta(lat, sub).items():
            z[s] = z.get(s, 0) + sign * c
    return b, {s: c for s, c in z.items() if c}


def beta_span_rank(lat: NcpLattice, w: Element) -> int:
    """Rank of span{beta_t : t decreasing} inside the free group on Rex(w)."""
    rex = lat.rex(w)
    idx = {s: i for i, s in enumerate(rex)}
    dec = lat.decreasing_rex(w)
    m = ExactMatrix(len(dec), len(rex))
    for r, s in enumerate(dec):
        for u, c in beta(lat, s).items():
            m.add(r, idx[u], c)
    return rank(m)


def beta_full_rank(lat: NcpLattice, w: Element) -> int:
    """Rank of span{beta_t : t in Rex(w)}; equals |D_w| when the decreasing
    betas already span."""
    rex = lat.rex(w)
    idx = {s: i for i, s in enumerate(rex)}
    m = ExactMatrix(len(rex), len(rex))
    for r, s in enumerate(rex):
        for u, c in beta(lat, s).items():
            m.add(r, idx[u], c)
    return rank(m)
