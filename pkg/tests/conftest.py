from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from strengthlab.field import QQ, PrimeField
from strengthlab.poly import Ring, monomials_of_degree

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

F3, F5, F7 = PrimeField(3), PrimeField(5), PrimeField(7)
TEST_FIELDS = [F3, F5, F7, PrimeField(101), QQ]


@pytest.fixture
def corpus():
    return CORPUS


def field_ids(F):
    return str(F)


def raw_elements(F):
    if F.is_finite:
        return st.integers(0, F.p - 1)
    return st.fractions(max_denominator=12).filter(lambda q: abs(q) < 50)


@st.composite
def forms(draw, ring: Ring, degree=None, max_degree=3):
    """Random homogeneous polynomial (possibly zero) of the ring."""
    d = draw(st.integers(1, max_degree)) if degree is None else degree
    basis = monomials_of_degree(ring.nvars, d)
    coeffs = draw(st.lists(raw_elements(ring.field), min_size=len(basis), max_size=len(basis)))
    return ring.from_dict(dict(zip(basis, coeffs)))


@st.composite
def polys(draw, ring: Ring, max_degree=3, max_terms=5):
    """Random (not necessarily homogeneous) polynomial."""
    n = ring.nvars
    mons = st.tuples(*[st.integers(0, max_degree) for _ in range(n)]).filter(lambda m: sum(m) <= max_degree)
    terms = draw(st.dictionaries(mons, raw_elements(ring.field), max_size=max_terms))
    return ring.from_dict(terms)
