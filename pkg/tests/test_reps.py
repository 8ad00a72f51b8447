from math import factorial

import pytest

from ncalgebra.reps import (
    appendix_table,
    conjugate,
    exponent_product,
    format_partition,
    multiplicity,
    multiplicity_vector,
    parse_partition,
    partitions,
    poincare_polynomial,
    sign_module,
    specht,
    specht_dim,
    sym_algebra,
    tensor_sign,
    trivial_module,
)

# appendix tables: rows keyed by the first partition of each conjugate pair
TABLE_SYM3 = {(3,): [1, 2], (2, 1): [0, 2]}
TABLE_SYM4 = {(4,): [1, 2, 2], (3, 1): [0, 1, 4], (2, 2): [0, 2, 4]}
TABLE_SYM5 = {(5,): [1, 0, 2, 4], (4, 1): [0, 1, 1, 4], (3, 2): [0, 1, 2, 6], (3, 1, 1): [0, 0, 4, 10]}


def _trace(m):
    return sum(m[i][i] for i in range(len(m)))


def test_partitions_and_conjugates():
    assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert conjugate((3, 1)) == (2, 1, 1)
    assert parse_partition("2,1,1") == (2, 1, 1)
    assert format_partition((2, 1, 1)) == "(2,1²)"
    with pytest.raises(ValueError):
        specht(4, (2, 1))


@pytest.mark.parametrize("n1", [2, 3, 4, 5])
def test_trivial_and_sign_specht(n1):
    triv = specht(n1, (n1,))
    sgn = specht(n1, (1,) * n1)
    assert all(g == [[1]] for g in triv.generators)
    assert all(g == [[-1]] for g in sgn.generators)


@pytest.mark.parametrize("n1", [3, 4, 5, 6])
def test_specht_modules_are_representations(n1):
    total = 0
    for lam in partitions(n1):
        u = specht(n1, lam)
        assert u.verify()
        assert u.dim == specht_dim(lam)
        total += u.dim**2
    assert total == factorial(n1)


def test_character_of_21_on_transposition():
    u = specht(3, (2, 1))
    assert u.dim == 2
    d = u.datum
    for t in range(d.nrefl):
        assert _trace(u.matrix(d.refl(t))) == 0


def test_tensor_sign():
    d = sym_algebra(3).datum
    assert tensor_sign(trivial_module(d)).generators == sign_module(d).generators
    u = specht(3, (2, 1))
    tu = tensor_sign(u)
    for w in d.elements():
        assert _trace(tu.matrix(w)) == _trace(specht(3, conjugate((2, 1))).matrix(w))
    assert tensor_sign(tu).generators == u.generators


def test_multiplicity_examples():
    assert multiplicity(sym_algebra(3), (2, 1), 1) == 2
    assert multiplicity(sym_algebra(5), (3, 1, 1), 3) == 10
    assert multiplicity(sym_algebra(4), (4,), 0) == 1
    with pytest.raises(ValueError):
        multiplicity(sym_algebra(3), (2, 1), 2)


@pytest.mark.parametrize("n1,expected", [(3, [2, 8]), (4, [2, 14, 36]), (5, [2, 18, 56, 160])])
def test_poincare(n1, expected):
    assert poincare_polynomial(n1) == expected


@pytest.mark.parametrize("n1,table", [(3, TABLE_SYM3), (4, TABLE_SYM4), (5, TABLE_SYM5)])
def test_appendix_tables(n1, table):
    t = appendix_table(n1)
    got = {tuple(r["partitions"][0]): r["values"] for r in t.rows}
    assert got == table
    for r in t.rows:
        lam = tuple(r["partitions"][0])
        assert len(r["partitions"]) == (1 if conjugate(lam) == lam else 2)


@pytest.mark.parametrize("n1", [3, 4, 5])
def test_homology_and_cohomology_agree(n1):
    alg = sym_algebra(n1)
    for lam in partitions(n1):
        u = specht(n1, lam, alg.datum)
        assert multiplicity_vector(alg, u, "F", "homology") == multiplicity_vector(alg, u, "F", "cohomology")
        assert multiplicity_vector(alg, u, "F") == multiplicity_vector(alg, specht(n1, conjugate(lam), alg.datum), "F")


@pytest.mark.parametrize("n1", [3, 4, 5])
def test_M_against_exponent_product(n1):
    alg = sym_algebra(n1)
    total = [0] * n1
    for lam in partitions(n1):
        vec = multiplicity_vector(alg, specht(n1, lam, alg.datum), "M")
        total = [a + specht_dim(lam) * v for a, v in zip(total, vec)]
    assert total == exponent_product(alg.datum.exponents)
    assert multiplicity_vector(alg, sign_module(alg.datum), "M") == [0] * n1


def test_modular_table_matches_exact():
    from ncalgebra.homology import DEFAULT_PRIME

    exact = appendix_table(4)
    modular = appendix_table(4, modulus=DEFAULT_PRIME)
    assert modular.rows == exact.rows
    assert modular.mode.startswith("modular certificate")


def test_parallel_table_matches_serial():
    assert appendix_table(4, jobs=2).to_json() == appendix_table(4).to_json()


def test_exponent_product():
    assert exponent_product([1, 2]) == [1, 3, 2]
    assert exponent_product([]) == [1]
