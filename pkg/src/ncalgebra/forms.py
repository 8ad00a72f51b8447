"""Differentials, skew derivations, the Kreweras map and the bilinear form.

All maps are evaluated on basis words and extended linearly; intermediate
words are normalized right away.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import NcAlgebra, Word, add_into
from .homology import ExactMatrix, det_bareiss


class Forms:
    """Operators on a fixed :class:`NcAlgebra`, with per-word caches."""

    def __init__(self, alg: NcAlgebra):
        self.alg = alg
        self.datum = alg.datum
        self._d: dict[Word, dict] = {}
        self._delta_t: dict[tuple[Word, int], dict] = {}
        self._d_t: dict[tuple[Word, int], dict] = {}
        self._pair: dict[tuple[Word, Word], int] = {}

    # --- helpers ----------------------------------------------------------

    def _conj_by_word(self, t: int, word: Word) -> int:
        """Index of t^{w} = w^-1 t w for w = t_{w1} t_{w2} ..."""
        for s in word:
            t = self.datum.conj_index(t, s)
        return t

    def _linear(self, fn, x: dict) -> dict:
        out: dict = {}
        for w, c in x.items():
            add_into(out, fn(w), c)
        return out

    # --- d and its pieces -------------------------------------------------

    def d_word(self, word: Word) -> dict:
        hit = self._d.get(word)
        if hit is None:
            k = len(word)
            hit = {}
            for i in range(k):
                add_into(hit, self.alg.normalize(word[:i] + word[i + 1 :]), (-1) ** (k - 1 - i))
            self._d[word] = hit
        return hit

    def d(self, x: dict) -> dict:
        """d(a_{t1}...a_{tk}) = sum_i (-1)^(k-i) (word without letter i)."""
        return self._linear(self.d_word, x)

    def d_t_word(self, word: Word, t: int) -> dict:
        key = (word, t)
        hit = self._d_t.get(key)
        if hit is None:
            k = len(word)
            hit = {}
            for i in range(k):
                if self._conj_by_word(word[i], word[i + 1 :]) == t:
                    add_into(hit, self.alg.normalize(word[:i] + word[i + 1 :]), (-1) ** (k - 1 - i))
            self._d_t[key] = hit
        return hit

    def d_t(self, x: dict, t: int) -> dict:
        """Skew derivation selecting the letter whose conjugate by the
        suffix after it equals t; summing over t recovers d."""
        return self._linear(lambda w: self.d_t_word(w, t), x)

    # --- delta and its pieces ---------------------------------------------

    def delta_t_word(self, word: Word, t: int) -> dict:
        key = (word, t)
        hit = self._delta_t.get(key)
        if hit is None:
            hit = {}
            for i, s in enumerate(word):
                if s == t:
                    head = tuple(self.datum.conj_index(u, s) for u in word[:i])
                    add_into(hit, self.alg.normalize(head + word[i + 1 :]), (-1) ** i)
            self._delta_t[key] = hit
        return hit

    def delta_t(self, x: dict, t: int) -> dict:
        return self._linear(lambda w: self.delta_t_word(w, t), x)

    def delta_word(self, word: Word) -> dict:
        out: dict = {}
        for t in set(word):
            add_into(out, self.delta_t_word(word, t))
        return out

    def delta(self, x: dict) -> dict:
        """delta(a_{t1}...a_{tk}) = sum_i (-1)^(i-1) a_{t1^{ti}}...a_{t(i-1)^{ti}} a_{t(i+1)}...a_{tk}."""
        return self._linear(self.delta_word, x)

    # --- Kreweras map -----------------------------------------------------

    def kappa_word(self, word: Word) -> dict:
        k = len(word)
        letters = [self._conj_by_word(word[j], tuple(reversed(word[:j]))) for j in range(k)]
        return self.alg.normalize(tuple(reversed(letters)))

    def kappa(self, x: dict) -> dict:
        """kappa(a_{t1}...a_{tk}) = a_{tk^{t(k-1)...t1}} ... a_{t2^{t1}} a_{t1}."""
        return self._linear(self.kappa_word, x)

    def kappa_inverse_word(self, word: Word) -> dict:
        k = len(word)
        letters = [self._conj_by_word(word[j], word[j + 1 :]) for j in range(k)]
        return self.alg.normalize(tuple(reversed(letters)))

    def kappa_inverse(self, x: dict) -> dict:
        return self._linear(self.kappa_inverse_word, x)

    # --- pairing ----------------------------------------------------------

    def pair_words(self, x: Word, y: Word) -> int:
        """<a_x, a_y> = delta_{xk} ... delta_{x1}(a_y) for basis words."""
        if len(x) != len(y):
            return 0
        if not x:
            return 1
        key = (x, y)
        hit = self._pair.get(key)
        if hit is None:
            hit = 0
            rest = x[1:]
            for w, c in self.delta_t_word(y, x[0]).items():
                hit += c * self.pair_words(rest, w)
            self._pair[key] = hit
        return hit

    def pair(self, x: dict, y: dict) -> int:
        """Bilinear form; x may contain arbitrary words, they are normalized."""
        total = 0
        xn = self.alg.from_terms(x)
        for u, a in xn.items():
            for v, b in y.items():
                total += a * b * self.pair_words(u, v)
        return total

    def gram(self, k: int) -> "GramMatrix":
        basis = self.alg.basis(k)
        entries = [[self.pair_words(u, v) for v in basis] for u in basis]
        return GramMatrix(k, basis, entries)

    # --- operator matrices -------------------------------------------------

    def matrix(self, kind: str, k: int, t: int | None = None) -> ExactMatrix:
        """Matrix on the degree-k basis of one of d, delta, d_t, delta_t,
        r_omega, l_omega, l_t (left mult. by a_t) or r_t."""
        alg = self.alg
        if kind == "d":
            return alg.operator_matrix(self.d_word, k, k - 1)
        if kind == "delta":
            return alg.operator_matrix(self.delta_word, k, k - 1)
        if kind == "d_t":
            return alg.operator_matrix(lambda w: self.d_t_word(w, t), k, k - 1)
        if kind == "delta_t":
            return alg.operator_matrix(lambda w: self.delta_t_word(w, t), k, k - 1)
        if kind == "l_t":
            return alg.operator_matrix(lambda w: alg.normalize((t,) + w), k, k + 1)
        if kind == "r_t":
            return alg.operator_matrix(lambda w: alg.normalize(w + (t,)), k, k + 1)
        if kind == "r_omega":
            return alg.operator_matrix(lambda w: alg.multiply({w: 1}, alg.omega()), k, k + 1)
        if kind == "l_omega":
            return alg.operator_matrix(lambda w: alg.multiply(alg.omega(), {w: 1}), k, k + 1)
        raise ValueError(f"unknown operator {kind!r}")


@dataclass
class GramMatrix:
    degree: int
    basis: list[Word]
    entries: list[list[int]]

    def is_upper_unitriangular(self) -> bool:
        n = len(self.entries)
        return all(self.entries[i][i] == 1 for i in range(n)) and all(
            self.entries[i][j] == 0 for i in range(n) for j in range(i)
        )

    def determinant(self) -> int:
        return det_bareiss(self.entries)


def forms_of(alg: NcAlgebra) -> Forms:
    """The cached :class:`Forms` instance of an algebra."""
    f = getattr(alg, "_forms", None)
    if f is None:
        f = Forms(alg)
        alg._forms = f
    return f


def d(alg: NcAlgebra, x: dict) -> dict:
    return forms_of(alg).d(x)


def delta(alg: NcAlgebra, x: dict) -> dict:
    return forms_of(alg).delta(x)


def kappa(alg: NcAlgebra, x: dict) -> dict:
    return forms_of(alg).kappa(x)


def pair(alg: NcAlgebra, x: dict, y: dict) -> int:
    return forms_of(alg).pair(x, y)


def gram(alg: NcAlgebra, k: int) -> GramMatrix:
    return forms_of(alg).gram(k)
