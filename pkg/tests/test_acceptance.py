"""One test per acceptance criterion; each prints a PASS/FAIL/SKIP line.

Extended runs (Sym7, Sym8 tables and the n = 5 Hilbert comparison) are
non-gating and only execute with NCALGEBRA_EXTENDED=1.
"""

import json
import os
import random
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from ncalgebra.cli import main
from ncalgebra.complexes import BasedModule, ChainComplex
from ncalgebra.homology import DEFAULT_PRIME, ExactMatrix, homology, random_unimodular, snf
from ncalgebra.reps import conjugate, exponent_product, multiplicity_vector, partitions, sign_module, specht, specht_dim, sym_algebra
from ncalgebra.tilde import TildeAlgebra, hilbert_compare
from ncalgebra import verify

from conftest import algebra, datum
from reference_tables import CAPTIONS, TABLES

EXTENDED = os.environ.get("NCALGEBRA_EXTENDED") == "1"
DIHEDRAL_3_6 = [("I2", m) for m in range(3, 7)]


@contextmanager
def criterion(capsys, number, title):
    ok = False
    try:
        yield
        ok = True
    finally:
        with capsys.disabled():
            print(f"\n[criterion {number:>2}] {'PASS' if ok else 'FAIL'}: {title}")


def skip_line(capsys, number, title):
    with capsys.disabled():
        print(f"\n[criterion {number:>2}] SKIP: {title} (non-gating; set NCALGEBRA_EXTENDED=1)")
    pytest.skip("extended run")


def cli_json(capsys, *argv):
    assert main(list(argv)) == 0
    return json.loads(capsys.readouterr()[0])


def check_table(data, n):
    got = {tuple(r["partitions"][0]): r["values"] for r in data["rows"]}
    assert got == TABLES[n], (got, TABLES[n])
    assert data["caption"] == CAPTIONS[n]


def test_criterion_01_tables_exact(capsys):
    with criterion(capsys, 1, "tables for Sym3..Sym6 match cell for cell, captions included"):
        for n, budget in ((3, 120), (4, 120), (5, 120), (6, 1800)):
            t0 = time.time()
            data = cli_json(capsys, "tables", "--sym", str(n), "--format", "json")
            assert time.time() - t0 < budget
            assert data["mode"] == "exact"
            check_table(data, n)
        assert main(["tables", "--sym", "3", "--format", "md"]) == 0
        assert CAPTIONS[3] in capsys.readouterr()[0]


def test_criterion_02_extended_tables(capsys):
    title = "Sym7 and Sym8 tables match, Sym7 flags degrees 5 and 6"
    if not EXTENDED:
        skip_line(capsys, 2, title)
    with criterion(capsys, 2, title):
        s7 = cli_json(capsys, "tables", "--sym", "7", "--modular", "--format", "json")
        check_table(s7, 7)
        assert s7["flagged_degrees"] == [5, 6]
        s8 = cli_json(capsys, "tables", "--sym", "8", "--modular", "--format", "json")
        check_table(s8, 8)


def test_criterion_03_acyclicity(capsys):
    with criterion(capsys, 3, "auxiliary complexes and C(sign) are acyclic for Sym3, Sym4, I2(3..6)"):
        for fam, r in [("A", 2), ("A", 3)] + DIHEDRAL_3_6:
            res = verify.acyclic(algebra(fam, r))
            assert len(res) == 9 and all(res.values()), (fam, r, res)


def test_criterion_04_boundaries_square_to_zero(capsys):
    groups = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("D", 4)] + [("I2", m) for m in range(3, 9)]
    with criterion(capsys, 4, "every built complex squares to zero"):
        for fam, r in groups:
            res = verify.d_squared(algebra(fam, r))
            assert all(res.values()), (fam, r, res)


def test_criterion_05_unimodularity(capsys):
    groups = [("A", 2), ("A", 3), ("A", 4)] + [("I2", m) for m in range(3, 9)]
    with criterion(capsys, 5, "Gram matrices are upper unitriangular with det 1"):
        for fam, r in groups:
            res = verify.unimodular(algebra(fam, r))
            assert all(res.values()), (fam, r, res)


def test_criterion_06_adjunctions(capsys):
    with criterion(capsys, 6, "adjunctions on A and on ZW (x) A for Sym3, Sym4"):
        for r in (2, 3):
            res = verify.adjunction(algebra("A", r))
            assert len(res) == 4 and all(res.values()), res


def test_criterion_07_fw_pipelines(capsys):
    with criterion(capsys, 7, "F/W cohomology: cochain complex = ideal quotient, consistent with homology"):
        for r in (2, 3, 4):
            res = verify.fw_pipelines(algebra("A", r))
            assert all(res.values()), (r, res)


def test_criterion_08_b_oracle(capsys):
    with criterion(capsys, 8, "beta spans have the rank of A_w and dims are sums of |D_w|"):
        for fam, r in [("A", 2), ("A", 3)] + DIHEDRAL_3_6:
            res = verify.b_oracle(algebra(fam, r))
            assert all(res.values()), (fam, r, res)


def test_criterion_09_multiplicity_symmetries(capsys):
    with criterion(capsys, 9, "conjugate symmetry, sign-free M, exponent product"):
        for n in (3, 4, 5, 6):
            alg = sym_algebra(n)
            vec = {lam: multiplicity_vector(alg, specht(n, lam, alg.datum), "F") for lam in partitions(n)}
            for lam, v in vec.items():
                assert v == vec[conjugate(lam)], (lam, v)
            total = [0] * n
            for lam in partitions(n):
                m = multiplicity_vector(alg, specht(n, lam, alg.datum), "M")
                total = [a + specht_dim(lam) * x for a, x in zip(total, m)]
            assert total == exponent_product(alg.datum.exponents)
            assert multiplicity_vector(alg, sign_module(alg.datum), "M") == [0] * n


def test_criterion_10_hilbert_series(capsys):
    with criterion(capsys, 10, "covering algebra and E_n share Hilbert series for n <= 4"):
        t0 = time.time()
        for n, top in ((2, 1), (3, 4), (4, 12)):
            r = hilbert_compare(n, top + 1)
            assert r["equal"] and r["matches_expected"] and r["tilde"][-1] == 0, r
        assert time.time() - t0 < 300


def test_criterion_10_extended_n5(capsys):
    title = "n = 5 Hilbert comparison by modular certificate"
    if not EXTENDED:
        skip_line(capsys, 10, title)
    with criterion(capsys, 10, title):
        r = hilbert_compare(5, 40, DEFAULT_PRIME)
        assert r["equal"] and r["matches_expected"] and r["mode"].startswith("modular")


def test_criterion_11_hopf(capsys):
    with criterion(capsys, 11, "Hopf axioms, coproduct example, Euler identity, nabla relations"):
        for r in (2, 3):
            res = verify.hopf(datum("A", r), 4)
            assert all(res.values()), (r, res)
        T = TildeAlgebra(datum("A", 3), 2)
        d = T.datum
        for t1, t2 in T.basis(2):
            want: dict = {}
            terms = [((), (t1, t2), 1), ((t1,), (t2,), 1), ((t2,), (d.conj_index(t1, t2),), -1), ((t1, t2), (), 1)]
            for left, right, c in terms:
                for a, ca in T.word(left).items():
                    for b, cb in T.word(right).items():
                        want[(a, b)] = want.get((a, b), 0) + c * ca * cb
            assert T.comult(T.word((t1, t2))) == {k: v for k, v in want.items() if v}


def test_criterion_12_homology_engine(capsys):
    with criterion(capsys, 12, "SNF example, Z/2 complex, unimodular invariance over 100 trials"):
        assert snf(ExactMatrix.from_dense([[2, 4], [6, 8]])) == (2, 4)
        c = ChainComplex("chain", {0: BasedModule(["x"]), 1: BasedModule(["y"])}, {1: ExactMatrix.from_dense([[2]])})
        res = homology(c)
        assert res.torsion[0] == (2,) and res.betti == {0: 0, 1: 0} and res.torsion[1] == ()
        rng = random.Random(12)
        for _ in range(100):
            r, k = rng.randint(1, 7), rng.randint(1, 7)
            a = [[rng.randint(-9, 9) for _ in range(k)] for _ in range(r)]
            u, v = random_unimodular(r, rng), random_unimodular(k, rng)
            ua = [[sum(u[i][j] * a[j][l] for j in range(r)) for l in range(k)] for i in range(r)]
            uav = [[sum(ua[i][j] * v[j][l] for j in range(k)) for l in range(k)] for i in range(r)]
            assert snf(ExactMatrix.from_dense(uav)) == snf(ExactMatrix.from_dense(a))
