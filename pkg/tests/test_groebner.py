import numpy as np
import pytest
from hypothesis import given, strategies as st

from strengthlab.errors import ResourceBudgetExceeded, UnitIdeal
from strengthlab.field import QQ
from strengthlab.groebner import (
    Budget,
    buchberger,
    codim,
    ideal_equal,
    ideal_member,
    is_reduced,
    krull_dimension,
    minimal_generator_count,
    minimal_generators,
    normal_form,
    satisfies_buchberger_criterion,
    use_budget,
)
from strengthlab.poly import GREVLEX, Ideal, MonomialOrder, Ring, mono_support, random_homogeneous

from conftest import F3, F5, F7, polys


@pytest.fixture
def R3():
    return Ring(QQ, 3)


@pytest.fixture
def twisted_cubic():
    R = Ring(QQ, 4, ("x0", "x1", "x2", "x3"))
    x0, x1, x2, x3 = R.gens()
    return Ideal(R, [x0 * x2 - x1**2, x1 * x3 - x2**2, x0 * x3 - x1 * x2])


def test_normal_form_examples(R3):
    x1, x2, x3 = R3.gens()
    G = buchberger([x1, x2 * x3])
    assert not normal_form(x2 * x3, G)
    assert not normal_form(x1**2, buchberger([x1]))
    G = buchberger([x1**2 - x3], GREVLEX)
    r = normal_form(x1**2 * x2 + x3, G)
    assert r == x2 * x3 + x3
    # the difference lies in the ideal: x1^2*x2 + x3 - r = x2*(x1^2 - x3)
    assert (x1**2 * x2 + x3) - r == x2 * (x1**2 - x3)


def test_buchberger_examples(R3):
    x1, x2, x3 = R3.gens()
    assert buchberger([x1, x2]).elements == [x1, x2]
    G = buchberger([x1 * x2 - x3**2, x2**2])
    assert x2 * x3**2 in G.elements
    assert x3**4 in G.elements


def test_twisted_cubic_membership(twisted_cubic):
    x0, x1, x2, x3 = twisted_cubic.ring.gens()
    f = x0 * x3**2 - x1 * x2 * x3
    # hand identity used as oracle
    assert f == x3 * (x0 * x3 - x1 * x2) + x2 * (x1 * x3 - x2**2) + x2 * (x2**2 - x1 * x3)
    assert ideal_member(f, twisted_cubic)
    G = twisted_cubic.groebner()
    assert is_reduced(G) and satisfies_buchberger_criterion(G)


def test_ideal_member_examples(R3):
    x1, x2, x3 = R3.gens()
    I = Ideal(R3, [x1 * x2 - x3**2, x3**4])
    assert ideal_member(x1 * x2 - x3**2, I)
    assert not ideal_member(R3.one(), Ideal(R3, [x1]))
    f = x1**2 * x2**2
    assert f == (x1 * x2 + x3**2) * (x1 * x2 - x3**2) + x3**4
    assert ideal_member(f, I)


def test_ideal_equal_examples(R3):
    x1, x2, x3 = R3.gens()
    assert ideal_equal(Ideal(R3, [x1, x2]), Ideal(R3, [x1 + x2, x2]))
    assert not ideal_equal(Ideal(R3, [x1]), Ideal(R3, [x1**2]))
    assert ideal_equal(Ideal(R3, [x1 * x2, x1 * x3]), Ideal(R3, [x1 * x2 + x1 * x3, x1 * x3]))


def brute_dimension(leading, n):
    """Oracle: scan every subset of variables, no pruning."""
    masks = [mono_support(m) for m in leading]
    best = 0
    for S in range(1 << n):
        if all(m & ~S for m in masks):
            best = max(best, bin(S).count("1"))
    return best


def test_dimension_examples(R3, twisted_cubic):
    x1, x2, x3 = R3.gens()
    I = Ideal(R3, [x1 * x2])
    assert krull_dimension(I) == 2 and codim(I) == 1
    R6 = Ring(F5, 6)
    for c in range(0, 7):
        assert codim(Ideal(R6, R6.gens()[:c])) == c
    G = twisted_cubic.groebner()
    assert brute_dimension(G.leading, 4) == 2
    assert codim(twisted_cubic) == 2


def test_unit_ideal_raises(R3):
    x1, _, _ = R3.gens()
    with pytest.raises(UnitIdeal):
        krull_dimension(Ideal(R3, [x1, R3.one()]))
    with pytest.raises(UnitIdeal):
        minimal_generators(Ideal(R3, [R3.one()]))


def test_mingens_examples(R3, twisted_cubic):
    x1, x2, _ = R3.gens()
    assert minimal_generator_count(Ideal(R3, [x1, x2, x1 + x2])) == (2, 2)
    assert minimal_generator_count(twisted_cubic) == (3, 6)
    assert minimal_generator_count(Ideal(R3, [x1**2, x1**3])) == (1, 2)
    assert minimal_generators(Ideal(R3, [x1, x2, x1 + x2])).indices == (0, 1)


def random_ideal(rng, p=None, n=None):
    F = [F3, F5, F7][int(rng.integers(0, 3))] if p is None else p
    n = int(rng.integers(2, 5)) if n is None else n
    R = Ring(F, n)
    r = int(rng.integers(1, 4))
    return Ideal(R, [random_homogeneous(R, int(rng.integers(1, 3)), rng) for _ in range(r)])


def test_random_bases_reduced_and_criterion():
    rng = np.random.default_rng(5)
    for _ in range(40):
        I = random_ideal(rng)
        for order in MonomialOrder:
            G = buchberger(I, order)
            assert satisfies_buchberger_criterion(G)
            assert is_reduced(G)
            for g in I.generators:
                assert not G.normal_form(g)


def test_dimension_independent_of_order_and_pit():
    rng = np.random.default_rng(11)
    for _ in range(40):
        I = random_ideal(rng)
        dims = {krull_dimension(I, o) for o in MonomialOrder}
        assert len(dims) == 1
        G = I.groebner()
        assert brute_dimension(G.leading, I.ring.nvars) == dims.pop()
        assert codim(I) <= len(I.generators)


def test_cache_generates_same_ideal():
    rng = np.random.default_rng(3)
    for _ in range(10):
        I = random_ideal(rng)
        G = I.groebner()
        assert I.groebner() is G
        J = Ideal(I.ring, G.elements)
        assert all(not J.groebner().normal_form(g) for g in I.generators)
        assert all(not G.normal_form(g) for g in G.elements)


def test_mu_invariant_under_recombination():
    rng = np.random.default_rng(17)
    for _ in range(30):
        I = random_ideal(rng, p=F5)
        mu = minimal_generator_count(I)
        gens = I.generators
        # random unitriangular recombination within equal degrees keeps the ideal
        new = []
        for i, g in enumerate(gens):
            h = g
            for j in range(i):
                if gens[j].degree() == g.degree():
                    h = h + gens[j].scale(int(rng.integers(0, 5)))
            new.append(h)
        J = Ideal(I.ring, new + [gens[0] * I.ring.var(0)])
        assert ideal_equal(I, J)
        assert minimal_generator_count(J) == mu


@given(st.data())
def test_normal_form_idempotent(data):
    R = Ring(F5, 3)
    gens = [data.draw(polys(R, max_degree=2)) for _ in range(2)]
    gens = [g for g in gens if g]
    if not gens:
        return
    G = buchberger(gens)
    f = data.draw(polys(R))
    r = G.normal_form(f)
    assert G.normal_form(r) == r
    for m in r.terms:
        assert not any(all(a <= b for a, b in zip(lt, m)) for lt in G.leading)


def test_budget_exceeded_is_loud():
    R = Ring(F5, 4)
    rng = np.random.default_rng(0)
    I = Ideal(R, [random_homogeneous(R, 3, rng) for _ in range(3)])
    with pytest.raises(ResourceBudgetExceeded):
        buchberger(I, GREVLEX, Budget(max_pairs=2))
    with use_budget(Budget(max_basis=3)):
        with pytest.raises(ResourceBudgetExceeded):
            buchberger(I)


def test_budget_env(monkeypatch):
    monkeypatch.setenv("STRENGTHLAB_BUDGET", "pairs=7,search=9")
    b = Budget.from_env()
    assert b.max_pairs == 7 and b.max_search == 9
    monkeypatch.setenv("STRENGTHLAB_BUDGET", "123")
    assert Budget.from_env().max_pairs == 123
