"""The noncrossing algebra over Z with its decreasing-word basis.

An element is a dict mapping basis words (strictly decreasing tuples of
0-based Steinberg indices) to nonzero integers. Arbitrary words are
brought to this basis by :meth:`NcAlgebra.normalize`.
"""

from __future__ import annotations

from .coxeter import ConfigurationError, CoxeterDatum, Element
from .homology import ExactMatrix, rank
from .lattice import NcpLattice, beta_span_rank

Word = tuple  # tuple of 0-based reflection indices
NcElement = dict  # Word -> int


def add_into(acc: dict, x: dict, coeff: int = 1) -> dict:
    for w, c in x.items():
        v = acc.get(w, 0) + coeff * c
        if v:
            acc[w] = v
        else:
            acc.pop(w, None)
    return acc


def scale(x: dict, c: int) -> dict:
    return {w: c * v for w, v in x.items()} if c else {}


def degree(x: dict) -> int | None:
    """Common degree of a homogeneous element, None for zero."""
    if not x:
        return None
    degs = {len(w) for w in x}
    if len(degs) != 1:
        raise ValueError("element is not homogeneous")
    return degs.pop()


class NcAlgebra:
    """Graded algebra generated by a_t, t a reflection, with relations
    a_t a_t = 0, a_s a_t = 0 when s t is not below gamma, and, for every
    w of length two below gamma, the sum of a_s a_t over the reduced
    factorizations (s, t) of w equal to zero.
    """

    def __init__(self, lattice: NcpLattice | CoxeterDatum):
        if isinstance(lattice, CoxeterDatum):
            lattice = NcpLattice(lattice)
        if not lattice.order_compatible:
            raise ConfigurationError(
                "gamma must lie below the bipartite Coxeter element; the reflection order is not compatible otherwise"
            )
        self.lattice = lattice
        self.datum = lattice.datum
        self.n = lattice.n
        self.nrefl = self.datum.nrefl
        self._basis: list[list[Word]] | None = None
        self._index: list[dict[Word, int]] | None = None
        self._by_w: dict[Element, list[Word]] | None = None
        self._norm: dict[Word, dict] = {}
        self._rewrite: dict[tuple[int, int], list[Word]] = {}
        self._vanish: dict[Word, bool] = {}
        self._use_theta = self.datum.theta is not None and lattice.gamma == self.datum.gamma
        if self._use_theta:
            th = self.datum.theta
            self._theta_nz = [[bool(th[i][j]) for j in range(self.nrefl)] for i in range(self.nrefl)]

    # --- basis ------------------------------------------------------------

    def _build_basis(self) -> None:
        lat = self.lattice
        by_w = {}
        basis = []
        for layer in lat.strata():
            words = []
            for w in layer:
                dec = lat.decreasing_rex(w)
                by_w[w] = dec
                words.extend(dec)
            words.sort()
            basis.append(words)
        self._basis = basis
        self._by_w = by_w
        self._index = [{w: i for i, w in enumerate(ws)} for ws in basis]

    def basis(self, k: int) -> list[Word]:
        """Degree-k basis words in lexicographic Steinberg order."""
        if self._basis is None:
            self._build_basis()
        if not 0 <= k <= self.n:
            return []
        return self._basis[k]

    def index(self, k: int) -> dict[Word, int]:
        if self._index is None:
            self._build_basis()
        return self._index[k] if 0 <= k <= self.n else {}

    def basis_by_w(self) -> dict[Element, list[Word]]:
        if self._by_w is None:
            self._build_basis()
        return self._by_w

    def dims(self) -> list[int]:
        return [len(self.basis(k)) for k in range(self.n + 1)]

    def total_rank(self) -> int:
        return sum(self.dims())

    # --- vanishing and normal form ---------------------------------------

    def is_vanishing_word(self, letters: Word) -> bool:
        """True iff the word is zero in the algebra for the trivial reason
        that its product is not a reduced factorization below gamma."""
        letters = tuple(letters)
        hit = self._vanish.get(letters)
        if hit is not None:
            return hit
        if self._use_theta:
            nz = self._theta_nz
            hit = any(nz[a][b] for i, a in enumerate(letters) for b in letters[i + 1 :])
        else:
            hit = not self.reduced_below_gamma(letters)
        self._vanish[letters] = hit
        return hit

    def reduced_below_gamma(self, letters: Word) -> bool:
        d = self.datum
        w = d.product(letters)
        return d.absolute_length(w) == len(letters) and self.lattice.below_gamma(w)

    def _two_letter(self, a: int, b: int) -> list[Word]:
        """Decreasing factorizations of t_a t_b, for an ascent a < b."""
        hit = self._rewrite.get((a, b))
        if hit is None:
            d = self.datum
            u = d.mul(d.refl(a), d.refl(b))
            hit = self.lattice.decreasing_rex(u)
            self._rewrite[(a, b)] = hit
        return hit

    def normalize(self, letters: Word) -> dict:
        """Express a word in the decreasing basis.

        Straightening acts on the rightmost ascent: a_{t}a_{t'} with t < t'
        is replaced by minus the sum over the decreasing factorizations of
        t t'. The reversed word strictly decreases lexicographically at
        every step, so the process terminates.
        """
        letters = tuple(letters)
        hit = self._norm.get(letters)
        if hit is not None:
            return hit
        if self.is_vanishing_word(letters):
            out = {}
        else:
            pos = None
            for i in range(len(letters) - 2, -1, -1):
                if letters[i] < letters[i + 1]:
                    pos = i
                    break
            if pos is None:
                out = {letters: 1}
            else:
                out = {}
                head, tail = letters[:pos], letters[pos + 2 :]
                for pair in self._two_letter(letters[pos], letters[pos + 1]):
                    add_into(out, self.normalize(head + pair + tail), -1)
        self._norm[letters] = out
        return out

    def element(self, letters: Word) -> dict:
        return dict(self.normalize(letters))

    def from_terms(self, terms: dict) -> dict:
        """Normalize a linear combination of arbitrary words."""
        out: dict = {}
        for w, c in terms.items():
            add_into(out, self.normalize(w), c)
        return out

    def multiply(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for u, a in x.items():
            for v, b in y.items():
                add_into(out, self.normalize(u + v), a * b)
        return out

    def generator(self, t: int) -> dict:
        return {(t,): 1}

    def omega(self) -> dict:
        """omega = sum of all generators."""
        return {(t,): 1 for t in range(self.nrefl)}

    def unit(self) -> dict:
        return {(): 1}

    def w_degree(self, word: Word) -> Element:
        return self.datum.product(word)

    # --- vectors ----------------------------------------------------------

    def to_vector(self, x: dict, k: int) -> list[int]:
        idx = self.index(k)
        v = [0] * len(idx)
        for w, c in x.items():
            v[idx[w]] = c
        return v

    def from_vector(self, v, k: int) -> dict:
        b = self.basis(k)
        return {b[i]: c for i, c in enumerate(v) if c}

    def operator_matrix(self, op, k: int, target_degree: int) -> ExactMatrix:
        """Matrix of a linear map given on basis words (columns = sources)."""
        src = self.basis(k)
        tidx = self.index(target_degree)
        m = ExactMatrix(len(tidx), len(src))
        for j, w in enumerate(src):
            for u, c in op(w).items():
                m.add(tidx[u], j, c)
        return m

    def word_label(self, word: Word) -> str:
        if not word:
            return "1"
        return "".join(f"a[{self.datum.refl_label(t)}]" for t in word)

    # --- oracle -----------------------------------------------------------

    def b_oracle_check(self, max_degree: int | None = None) -> dict:
        """Compare ranks with the Hurwitz-action model, element by element."""
        if max_degree is None:
            max_degree = self.n
        rows = []
        ok = True
        for k, layer in enumerate(self.lattice.strata()):
            if k > max_degree:
                break
            for w in layer:
                want = len(self.basis_by_w()[w])
                got = beta_span_rank(self.lattice, w) if k else 1
                rows.append((self.datum.label(w), want, got))
                ok &= want == got
        per_degree = [sum(len(self.basis_by_w()[w]) for w in layer) for layer in self.lattice.strata()[: max_degree + 1]]
        ok &= per_degree == self.dims()[: max_degree + 1]
        return {"pass": ok, "rows": rows, "dims": per_degree}


def relation_sum(alg: NcAlgebra, w: Element) -> dict:
    """Sum of normalize(s, t) over all reduced factorizations of w."""
    out: dict = {}
    for pair in alg.lattice.rex(w):
        add_into(out, alg.normalize(pair))
    return out


def word_rank(alg: NcAlgebra, words: list[Word], k: int) -> int:
    m = ExactMatrix(len(words), len(alg.basis(k)))
    idx = alg.index(k)
    for r, w in enumerate(words):
        for u, c in alg.normalize(w).items():
            m.add(r, idx[u], c)
    return rank(m)
