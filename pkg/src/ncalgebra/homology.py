"""Exact linear algebra over the integers and rationals.

Sparse integer matrices, Smith normal form, exact and modular rank,
integer kernels and lattice intersections, and homology assembly for
chain or cochain complexes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable

# a Mersenne prime; well below 2**62 so products stay cheap
DEFAULT_PRIME = (1 << 61) - 1


class ResourceError(RuntimeError):
    """Raised when a computation would exceed a configured size guard."""


class ExactMatrix:
    """Sparse matrix with exact integer or rational entries.

    Rows are stored as ``{row: {col: value}}`` and zero entries are never
    stored.
    """

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: dict | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows: dict[int, dict[int, int | Fraction]] = {}
        if rows:
            for r, row in rows.items():
                clean = {c: v for c, v in row.items() if v}
                if clean:
                    self.rows[r] = clean

    @classmethod
    def from_dense(cls, data: list[list]) -> "ExactMatrix":
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        return cls(nrows, ncols, {i: dict(enumerate(row)) for i, row in enumerate(data)})

    @classmethod
    def from_triplets(cls, nrows: int, ncols: int, triplets: Iterable) -> "ExactMatrix":
        m = cls(nrows, ncols)
        for r, c, v in triplets:
            m.add(r, c, v)
        return m

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, {i: {i: 1} for i in range(n)})

    def add(self, r: int, c: int, v) -> None:
        if not v:
            return
        if not (0 <= r < self.nrows and 0 <= c < self.ncols):
            raise IndexError(f"entry ({r}, {c}) outside a {self.nrows}x{self.ncols} matrix")
        row = self.rows.setdefault(r, {})
        nv = row.get(c, 0) + v
        if nv:
            row[c] = nv
        else:
            del row[c]
            if not row:
                del self.rows[r]

    def get(self, r: int, c: int):
        return self.rows.get(r, {}).get(c, 0)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def nnz(self) -> int:
        return sum(len(row) for row in self.rows.values())

    def triplets(self) -> list[tuple[int, int, int | Fraction]]:
        return [(r, c, self.rows[r][c]) for r in sorted(self.rows) for c in sorted(self.rows[r])]

    def to_dense(self) -> list[list]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for r, row in self.rows.items():
            for c, v in row.items():
                out[r][c] = v
        return out

    def transpose(self) -> "ExactMatrix":
        t = ExactMatrix(self.ncols, self.nrows)
        for r, row in self.rows.items():
            for c, v in row.items():
                t.rows.setdefault(c, {})[r] = v
        return t

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = ExactMatrix(self.nrows, other.ncols)
        for r, row in self.rows.items():
            acc: dict[int, int | Fraction] = {}
            for k, a in row.items():
                orow = other.rows.get(k)
                if orow:
                    for c, b in orow.items():
                        acc[c] = acc.get(c, 0) + a * b
            acc = {c: v for c, v in acc.items() if v}
            if acc:
                out.rows[r] = acc
        return out

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        out = self.copy()
        for r, row in other.rows.items():
            for c, v in row.items():
                out.add(r, c, v)
        return out

    def __neg__(self) -> "ExactMatrix":
        return self.scaled(-1)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactMatrix) and self.shape == other.shape and self.rows == other.rows

    def __repr__(self) -> str:
        return f"ExactMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"

    def copy(self) -> "ExactMatrix":
        return ExactMatrix(self.nrows, self.ncols, {r: dict(row) for r, row in self.rows.items()})

    def scaled(self, s) -> "ExactMatrix":
        return ExactMatrix(self.nrows, self.ncols, {r: {c: s * v for c, v in row.items()} for r, row in self.rows.items()})

    def is_zero(self) -> bool:
        return not self.rows

    def is_integral(self) -> bool:
        return all(not isinstance(v, Fraction) or v.denominator == 1 for row in self.rows.values() for v in row.values())

    def integer_rows(self) -> list[dict[int, int]]:
        """Rows scaled by the lcm of their denominators; rank is unchanged."""
        out = []
        for r in sorted(self.rows):
            row = self.rows[r]
            den = 1
            for v in row.values():
                if isinstance(v, Fraction):
                    den = lcm(den, v.denominator)
            out.append({c: int(v * den) for c, v in row.items()})
        return out

    def to_int(self) -> "ExactMatrix":
        if not self.is_integral():
            raise TypeError("matrix has non-integral rational entries")
        return ExactMatrix(self.nrows, self.ncols, {r: {c: int(v) for c, v in row.items()} for r, row in self.rows.items()})

    def to_json(self) -> dict:
        return {
            "rows": self.nrows,
            "cols": self.ncols,
            "entries": [[r, c, v if isinstance(v, int) else str(v)] for r, c, v in self.triplets()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ExactMatrix":
        return cls.from_triplets(data["rows"], data["cols"], ((r, c, Fraction(v) if isinstance(v, str) else v) for r, c, v in data["entries"]))


def kron(a: list[list], b: ExactMatrix) -> ExactMatrix:
    """Kronecker product of a small dense matrix with a sparse one."""
    na, ma = len(a), len(a[0]) if a else 0
    out = ExactMatrix(na * b.nrows, ma * b.ncols)
    for i in range(na):
        for j in range(ma):
            s = a[i][j]
            if not s:
                continue
            for r, row in b.rows.items():
                orow = out.rows.setdefault(i * b.nrows + r, {})
                for c, v in row.items():
                    key = j * b.ncols + c
                    nv = orow.get(key, 0) + s * v
                    if nv:
                        orow[key] = nv
                    else:
                        del orow[key]
    out.rows = {r: row for r, row in out.rows.items() if row}
    return out


# ---------------------------------------------------------------------------
# rank


def _rank_integer_rows(rows: list[dict[int, int]]) -> int:
    """Fraction-free echelon reduction of integer rows; returns the rank.

    Each incoming row is reduced against the pivot rows by cross
    multiplication, and its content is divided out after every step.
    """
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        v = dict(row)
        while v:
            c = min(v)
            prow = pivots.get(c)
            if prow is None:
                g = 0
                for x in v.values():
                    g = gcd(g, x)
                if g > 1:
                    v = {k: x // g for k, x in v.items()}
                pivots[c] = v
                break
            p, a = prow[c], v[c]
            g = gcd(p, a)
            p, a = p // g, a // g
            nv = {k: p * x for k, x in v.items()}
            for k, x in prow.items():
                y = nv.get(k, 0) - a * x
                if y:
                    nv[k] = y
                else:
                    nv.pop(k, None)
            g = 0
            for x in nv.values():
                g = gcd(g, x)
                if g == 1:
                    break
            if g > 1:
                nv = {k: x // g for k, x in nv.items()}
            v = nv
    return len(pivots)


def _rank_mod_p(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        v = {c: x % p for c, x in row.items() if x % p}
        while v:
            c = min(v)
            prow = pivots.get(c)
            if prow is None:
                inv = pow(v[c], -1, p)
                pivots[c] = {k: x * inv % p for k, x in v.items()}
                break
            a = v[c]
            for k, x in prow.items():
                y = (v.get(k, 0) - a * x) % p
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return len(pivots)


# above this many stored entries, ranks go through FLINT when it is installed
FLINT_THRESHOLD = 20_000


def _flint():
    try:
        import flint
    except ImportError:  # pragma: no cover - optional accelerator
        return None
    return flint


def rank(m: ExactMatrix, modulus: int | None = None, backend: str = "auto") -> int:
    """Rank over the rationals, or over GF(p) when ``modulus`` is given.

    ``backend`` is "python" (sparse fraction-free elimination, rows ordered
    by length), "flint" (FLINT's exact dense elimination) or "auto".
    """
    if not m.rows:
        return 0
    rows = m.integer_rows()
    flint = _flint() if backend != "python" else None
    if backend == "flint" and flint is None:
        raise RuntimeError("python-flint is not installed")
    if flint is not None and (backend == "flint" or m.nnz() > FLINT_THRESHOLD):
        used = sorted({c for row in rows for c in row})
        cidx = {c: j for j, c in enumerate(used)}
        dense = [[0] * len(used) for _ in rows]
        for i, row in enumerate(rows):
            for c, x in row.items():
                dense[i][cidx[c]] = x
        if modulus is None:
            return flint.fmpz_mat(dense).rank()
        if modulus < (1 << 63):
            return flint.nmod_mat(dense, modulus).rank()
    rows.sort(key=len)
    if modulus is None:
        return _rank_integer_rows(rows)
    return _rank_mod_p(rows, modulus)


DENSE_FRACTION = 0.05


def _density(m: ExactMatrix) -> float:
    return m.nnz() / max(1, m.nrows * m.ncols)


def product_is_zero(a: ExactMatrix, b: ExactMatrix) -> bool:
    """Exact test of a @ b == 0, through FLINT for large, fairly dense
    integer inputs; sparse products stay in Python."""
    flint = _flint()
    big = a.nnz() * b.nnz() > FLINT_THRESHOLD**2 // 100
    if flint is not None and big and _density(a) > DENSE_FRACTION and _density(b) > DENSE_FRACTION and a.is_integral() and b.is_integral():
        if a.ncols != b.nrows:
            raise ValueError("shape mismatch")
        fa = flint.fmpz_mat(a.nrows, a.ncols)
        for r, row in a.rows.items():
            for c, v in row.items():
                fa[r, c] = int(v)
        fb = flint.fmpz_mat(b.nrows, b.ncols)
        for r, row in b.rows.items():
            for c, v in row.items():
                fb[r, c] = int(v)
        prod = fa * fb
        return prod == flint.fmpz_mat(a.nrows, b.ncols)
    return (a @ b).is_zero()


def det_bareiss(a: list[list[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(map(int, row)) for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            p = next((i for i in range(k + 1, n) if m[i][k]), None)
            if p is None:
                return 0
            m[k], m[p] = m[p], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form


def _dense_snf(a: list[list[int]]) -> list[int]:
    """Invariant factors of a dense integer matrix (destroys ``a``)."""
    out = []
    a = [row for row in a if any(row)]
    while a and a[0]:
        ncols = len(a[0])
        best = None
        for i, row in enumerate(a):
            for j, x in enumerate(row):
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, i, j = best
        a[0], a[i] = a[i], a[0]
        for row in a:
            row[0], row[j] = row[j], row[0]
        while True:
            p = a[0][0]
            changed = False
            for i in range(1, len(a)):
                x = a[i][0]
                if x:
                    q = x // p
                    ri, r0 = a[i], a[0]
                    for k in range(ncols):
                        ri[k] -= q * r0[k]
                    if ri[0]:
                        changed = True
            for j in range(1, ncols):
                x = a[0][j]
                if x:
                    q = x // p
                    for row in a:
                        row[j] -= q * row[0]
                    if a[0][j]:
                        changed = True
            if changed:
                # move the smallest leftover in row/column 0 to the corner
                cands = [(abs(a[i][0]), i, 0) for i in range(len(a)) if a[i][0]]
                cands += [(abs(a[0][j]), 0, j) for j in range(ncols) if a[0][j]]
                _, i, j = min(cands)
                a[0], a[i] = a[i], a[0]
                for row in a:
                    row[0], row[j] = row[j], row[0]
                continue
            bad = None
            for i in range(1, len(a)):
                for j in range(1, ncols):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            a[0] = [x + y for x, y in zip(a[0], a[bad])]
        out.append(abs(a[0][0]))
        a = [row[1:] for row in a[1:]]
        a = [row for row in a if any(row)]
    return out


def _eliminate_units(rows: dict[int, dict[int, int]]) -> int:
    """Pivot on +-1 entries until none remain; returns the number of pivots.

    A unit pivot clears its column by row operations; the leftover entries
    of the pivot row are then cleared by column operations that touch
    nothing else, so row and column are simply dropped.
    """
    cols: dict[int, set[int]] = {}
    for r, row in rows.items():
        for c in row:
            cols.setdefault(c, set()).add(r)
    count = 0
    progress = True
    while progress:
        progress = False
        for r in sorted(rows):
            row = rows.get(r)
            if not row:
                continue
            units = [c for c, x in row.items() if x in (1, -1)]
            if not units:
                continue
            c = min(units, key=lambda k: (len(cols[k]), k))
            p = row[c]
            for r2 in sorted(cols[c] - {r}):
                row2 = rows[r2]
                q = row2[c] * p  # p is its own inverse
                for k, x in row.items():
                    y = row2.get(k, 0) - q * x
                    if y:
                        if k not in row2:
                            cols[k].add(r2)
                        row2[k] = y
                    else:
                        if k in row2:
                            del row2[k]
                            cols[k].discard(r2)
                if not row2:
                    del rows[r2]
            for k in row:
                cols[k].discard(r)
            del rows[r]
            count += 1
            progress = True
    return count


def snf(m: ExactMatrix) -> tuple[int, ...]:
    """Nonzero invariant factors of an integer matrix, in divisibility order.

    Unit pivots are eliminated sparsely first; the remaining core is
    handled densely with a minimal-absolute-value pivot rule.
    """
    if not m.is_integral():
        raise TypeError("snf requires an integer matrix")
    rows = {r: {c: int(v) for c, v in row.items()} for r, row in m.rows.items()}
    ones = _eliminate_units(rows)
    if rows:
        rlist = sorted(rows)
        clist = sorted({c for row in rows.values() for c in row})
        cidx = {c: j for j, c in enumerate(clist)}
        dense = [[0] * len(clist) for _ in rlist]
        for i, r in enumerate(rlist):
            for c, x in rows[r].items():
                dense[i][cidx[c]] = x
        rest = _dense_snf(dense)
    else:
        rest = []
    factors = [1] * ones + rest
    return tuple(_normalize_invariants(factors))


def _normalize_invariants(factors: list[int]) -> list[int]:
    """Turn any diagonal into the divisibility chain with the same product."""
    d = sorted(abs(x) for x in factors if x)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                g = gcd(d[i], d[j])
                if g != d[i]:
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
        d.sort()
    return d


# ---------------------------------------------------------------------------
# integer lattices (dense; used on small matrices only)


def row_echelon_with_transform(a: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Integer row echelon form H = U a with U unimodular."""
    h = [list(r) for r in a]
    n = len(h)
    ncols = len(h[0]) if n else 0
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    prow = 0
    for c in range(ncols):
        if prow >= n:
            break
        while True:
            nz = [i for i in range(prow, n) if h[i][c]]
            if not nz:
                break
            i = min(nz, key=lambda k: abs(h[k][c]))
            h[prow], h[i] = h[i], h[prow]
            u[prow], u[i] = u[i], u[prow]
            done = True
            for k in range(prow + 1, n):
                if h[k][c]:
                    q = h[k][c] // h[prow][c]
                    h[k] = [x - q * y for x, y in zip(h[k], h[prow])]
                    u[k] = [x - q * y for x, y in zip(u[k], u[prow])]
                    if h[k][c]:
                        done = False
            if done:
                break
        if any(h[i][c] for i in range(prow, n)):
            prow += 1
    return h, u


def integer_kernel(a: list[list[int]], ncols: int | None = None) -> list[list[int]]:
    """Z-basis of {x : a x = 0} as a list of vectors."""
    nrows = len(a)
    if ncols is None:
        ncols = len(a[0]) if nrows else 0
    at = [[a[i][j] for i in range(nrows)] for j in range(ncols)]
    if nrows == 0:
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    h, u = row_echelon_with_transform(at)
    return [u[i] for i in range(ncols) if not any(h[i])]


def lattice_basis(gens: list[list[int]], dim: int) -> list[list[int]]:
    """Z-basis (as vectors) of the lattice spanned by ``gens`` in Z^dim."""
    if not gens:
        return []
    for g in gens:
        if len(g) != dim:
            raise ValueError("generator outside the ambient lattice")
    h, _ = row_echelon_with_transform(gens)
    return [row for row in h if any(row)]


def solve_rational(basis: list[list], v: list) -> list[Fraction]:
    """Coordinates of v in the span of independent vectors ``basis``."""
    k = len(basis)
    dim = len(v)
    # augmented system: sum_j c_j basis[j] = v, solved by Gauss-Jordan
    mat = [[Fraction(basis[j][i]) for j in range(k)] + [Fraction(v[i])] for i in range(dim)]
    piv_cols = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, dim) if mat[i][c]), None)
        if p is None:
            raise ValueError("basis vectors are dependent")
        mat[r], mat[p] = mat[p], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(dim):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        piv_cols.append(c)
        r += 1
    if any(mat[i][k] for i in range(r, dim)):
        raise ValueError("vector is not in the span")
    return [mat[i][k] for i in range(k)]


@dataclass
class LatticeReport:
    intersection: list[list[int]]
    free_rank: int
    torsion: tuple[int, ...]


def lattice_ops(
    gens_a: list[list[int]], gens_b: list[list[int]], dim: int, gens_c: list[list[int]] | None = None
) -> LatticeReport:
    """Intersection of two lattices in Z^dim and the invariants of
    (A ∩ B) / C for a sublattice C of the intersection (C = 0 by default)."""
    a = lattice_basis(gens_a, dim)
    b = lattice_basis(gens_b, dim)
    inter = intersect_lattices(a, b, dim)
    c = lattice_basis(gens_c, dim) if gens_c else []
    free, tors = quotient_invariants(inter, c)
    return LatticeReport(inter, free, tors)


def intersect_lattices(a: list[list[int]], b: list[list[int]], dim: int) -> list[list[int]]:
    if not a or not b:
        return []
    # columns of [A | -B]; kernel vectors (x, y) give A x = B y
    mat = [[a[j][i] for j in range(len(a))] + [-b[j][i] for j in range(len(b))] for i in range(dim)]
    ker = integer_kernel(mat, len(a) + len(b))
    gens = [[sum(x[j] * a[j][i] for j in range(len(a))) for i in range(dim)] for x in ker]
    return lattice_basis([g for g in gens if any(g)], dim)


def quotient_invariants(big: list[list[int]], small: list[list[int]]) -> tuple[int, tuple[int, ...]]:
    """Free rank and torsion of the lattice quotient big/small (small ⊆ big)."""
    if not big:
        if small:
            raise ValueError("sublattice is not contained in the lattice")
        return 0, ()
    coords = []
    for v in small:
        c = solve_rational(big, v)
        if any(x.denominator != 1 for x in c):
            raise ValueError("sublattice is not contained in the lattice")
        coords.append([int(x) for x in c])
    factors = snf(ExactMatrix.from_dense(coords)) if coords else ()
    return len(big) - len(factors), tuple(f for f in factors if f > 1)


# ---------------------------------------------------------------------------
# homology


@dataclass
class HomologyResult:
    """Per-degree Betti numbers and torsion coefficients."""

    degrees: list[int]
    betti: dict[int, int]
    torsion: dict[int, tuple[int, ...]] = field(default_factory=dict)
    coeff: str = "Z"
    mode: str = "exact"

    def is_zero(self) -> bool:
        return all(b == 0 for b in self.betti.values()) and not any(self.torsion.values())

    def as_lists(self) -> tuple[list[int], list[tuple[int, ...]]]:
        return [self.betti[k] for k in self.degrees], [self.torsion.get(k, ()) for k in self.degrees]


def homology(complex_, coeff: str = "Z", modulus: int | None = None, verify: bool = True) -> HomologyResult:
    """(Co)homology of a complex over Z or Q.

    For chain complexes boundaries lower the degree; for cochain complexes
    they raise it. Over Z torsion comes from the Smith form of the incoming
    map. ``modulus`` switches Q-ranks to GF(p) ranks and labels the result.
    """
    if verify and not complex_.verify():
        raise ArithmeticError("composition of consecutive boundaries is nonzero")
    if coeff not in ("Z", "Q"):
        raise ValueError(f"unsupported coefficients {coeff!r}")
    if coeff == "Z" and modulus is not None:
        raise ValueError("modular ranks are only available for rational coefficients")
    degrees = complex_.degrees()
    ranks: dict[int, int] = {}
    invariants: dict[int, tuple[int, ...]] = {}
    for k, m in complex_.boundaries.items():
        if coeff == "Z":
            f = snf(m.to_int())
            ranks[k] = len(f)
            invariants[k] = tuple(x for x in f if x > 1)
        else:
            ranks[k] = rank(m, modulus)
    step = -1 if complex_.direction == "chain" else 1
    betti, torsion = {}, {}
    for k in degrees:
        out_rank = ranks.get(k, 0)
        in_deg = k - step
        in_rank = ranks.get(in_deg, 0)
        betti[k] = complex_.rank(k) - out_rank - in_rank
        torsion[k] = invariants.get(in_deg, ()) if coeff == "Z" else ()
    mode = "exact" if modulus is None else f"modular certificate (p={modulus})"
    return HomologyResult(degrees, betti, torsion, coeff, mode)


def random_unimodular(n: int, rng: random.Random, steps: int = 12) -> list[list[int]]:
    """A random product of elementary integer matrices and signed swaps."""
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    if n == 0:
        return u
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            u[i] = [-x for x in u[i]]
            continue
        q = rng.randint(-3, 3)
        u[i] = [x + q * y for x, y in zip(u[i], u[j])]
        if rng.random() < 0.3:
            u[i], u[j] = u[j], u[i]
    return u
