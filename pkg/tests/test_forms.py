import pytest
from hypothesis import given, strategies as st

from ncalgebra.algebra import add_into
from ncalgebra.forms import d, delta, forms_of, gram, kappa, pair

from conftest import algebra

EXHAUSTIVE = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("D", 3), ("I2", 3), ("I2", 5), ("I2", 8)]


def all_basis(alg):
    return [w for k in range(alg.n + 1) for w in alg.basis(k)]


def test_d_examples(sym4):
    f = forms_of(sym4)
    assert f.d({(3,): 1}) == {(): 1}
    for t1, t2 in sym4.basis(2):
        assert f.d({(t1, t2): 1}) == {(t2,): -1, (t1,): 1}


def test_delta_examples(sym4):
    f = forms_of(sym4)
    dat = sym4.datum
    assert f.delta({(2,): 1}) == {(): 1}
    for t1, t2 in sym4.basis(2):
        want: dict = {}
        add_into(want, {(t2,): 1})
        add_into(want, {(dat.conj_index(t1, t2),): -1})
        assert f.delta({(t1, t2): 1}) == want


def test_delta_t_degree_one(sym3):
    f = forms_of(sym3)
    for t in range(3):
        for s in range(3):
            assert f.delta_t({(s,): 1}, t) == ({(): 1} if s == t else {})
            assert f.d_t({(s,): 1}, t) == ({(): 1} if s == t else {})


def test_kappa_examples(sym4):
    f = forms_of(sym4)
    dat = sym4.datum
    assert f.kappa({(4,): 1}) == {(4,): 1}
    for t1, t2 in sym4.basis(2):
        assert f.kappa({(t1, t2): 1}) == sym4.normalize((dat.conj_index(t2, t1), t1))


@pytest.mark.parametrize("family,rank", EXHAUSTIVE)
def test_differential_identities(family, rank):
    alg = algebra(family, rank)
    f = forms_of(alg)
    for w in all_basis(alg):
        x = {w: 1}
        assert f.d(f.d(x)) == {}
        assert f.delta(f.delta(x)) == {}
        assert f.d(f.delta(x)) == f.delta(f.d(x))
        assert f.kappa(f.d(x)) == f.delta(f.kappa(x))
        assert f.kappa_inverse(f.kappa(x)) == x


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3), ("I2", 4)])
def test_skew_derivation_identities(family, rank):
    alg = algebra(family, rank)
    f = forms_of(alg)
    dat = alg.datum
    N = alg.nrefl
    by_w: dict = {}
    for a in range(N):
        for b in range(N):
            if a != b:
                by_w.setdefault(dat.mul(dat.refl(a), dat.refl(b)), []).append((a, b))
    for w in all_basis(alg):
        x = {w: 1}
        for t in range(N):
            assert f.delta_t(f.delta_t(x, t), t) == {}
            for s in range(N):
                assert f.d_t(f.delta_t(x, s), t) == f.delta_t(f.d_t(x, t), s)
        # the opposite-algebra relations: sum over Rex(u) of delta_t2 delta_t1 = 0
        for u, pairs in by_w.items():
            if not alg.lattice.below_gamma(u):
                continue
            total: dict = {}
            for a, b in pairs:
                add_into(total, f.delta_t(f.delta_t(x, a), b))
            assert total == {}
        # summing the pieces recovers d and delta
        sd: dict = {}
        sdl: dict = {}
        for t in range(N):
            add_into(sd, f.d_t(x, t))
            add_into(sdl, f.delta_t(x, t))
        assert sd == f.d(x) and sdl == f.delta(x)


@pytest.mark.parametrize("family,rank", EXHAUSTIVE)
def test_relations_are_annihilated(family, rank):
    alg = algebra(family, rank)
    f = forms_of(alg)
    if alg.n < 2:
        return
    for u in alg.lattice.strata()[2]:
        for op in (f.d_word, f.delta_word):
            total: dict = {}
            for pair_ in alg.lattice.rex(u):
                add_into(total, op(pair_))
            assert total == {}
    for t in range(alg.nrefl):
        assert f.d_word((t, t)) == {} and f.delta_word((t, t)) == {}


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("I2", 6)])
def test_leibniz_rules(family, rank):
    alg = algebra(family, rank)
    f = forms_of(alg)
    dat = alg.datum
    for k in range(1, alg.n + 1):
        for w in alg.basis(k):
            for cut in range(k + 1):
                x, y = {w[:cut]: 1}, {w[cut:]: 1}
                lhs = f.d({w: 1})
                rhs: dict = {}
                add_into(rhs, alg.multiply(f.d(x), y), (-1) ** (k - cut))
                add_into(rhs, alg.multiply(x, f.d(y)))
                assert lhs == rhs
            head, t = w[:-1], w[-1]
            rhs = alg.multiply(f.delta({head: 1}), {(t,): 1})
            add_into(rhs, alg.normalize(tuple(dat.conj_index(s, t) for s in head)), (-1) ** (k - 1))
            assert f.delta({w: 1}) == rhs


def test_pairing_examples(sym4):
    assert pair(sym4, {(): 1}, {(): 1}) == 1
    for t in range(6):
        for s in range(6):
            assert pair(sym4, {(t,): 1}, {(s,): 1}) == int(s == t)
    for k in range(4):
        for w in sym4.basis(k):
            assert pair(sym4, {w: 1}, {w: 1}) == 1
    assert pair(sym4, {(0,): 1}, {(): 1}) == 0


def test_gram_examples(sym3):
    assert gram(sym3, 0).entries == [[1]]
    assert gram(sym3, 1).entries == [[int(i == j) for j in range(3)] for i in range(3)]
    g = gram(sym3, 2)
    assert len(g.entries) == 2 and g.is_upper_unitriangular() and g.determinant() == 1


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3), ("A", 4), ("B", 3), ("D", 4), ("I2", 5), ("I2", 8)])
def test_gram_unimodular(family, rank):
    alg = algebra(family, rank)
    for k in range(alg.n + 1):
        g = gram(alg, k)
        assert g.is_upper_unitriangular()
        assert abs(g.determinant()) == 1


@given(st.lists(st.integers(0, 5), max_size=3).map(tuple), st.integers(0, 5))
def test_adjunctions_random(word, t):
    alg = algebra("A", 3)
    f = forms_of(alg)
    x = alg.normalize(word)
    k = len(word) + 1
    for v in alg.basis(k):
        y = {v: 1}
        assert pair(alg, alg.multiply({(t,): 1}, x), y) == pair(alg, x, f.delta_t(y, t))
        assert pair(alg, alg.multiply(x, {(t,): 1}), y) == pair(alg, x, f.d_t(y, t))


def test_module_level_wrappers(sym3):
    x = {sym3.basis(2)[0]: 1}
    assert d(sym3, x) == forms_of(sym3).d(x)
    assert delta(sym3, x) == forms_of(sym3).delta(x)
    assert kappa(sym3, x) == forms_of(sym3).kappa(x)
