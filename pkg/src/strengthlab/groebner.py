"""Buchberger's algorithm and the ideal-theoretic quantities built on it.

Reduced bases, normal forms, membership and equality, Krull dimension via
independent variable sets of the leading-term ideal, and minimal generator
counts by degree-wise linear algebra.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass, replace
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .errors import ResourceBudgetExceeded, RingMismatch, UnitIdeal
from .linalg import SpanReducer
from .poly import (
    GREVLEX,
    Ideal,
    Monomial,
    MonomialOrder,
    Polynomial,
    Ring,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_support,
    monomials_of_degree,
)


@dataclass(frozen=True)
class Budget:
    """Resource caps. Exceeding any of them raises, never truncates."""

    max_pairs: int = 200_000
    max_basis: int = 5_000
    max_degree: int = 64
    max_search: int = 2_000_000

    @classmethod
    def from_env(cls, base: Optional["Budget"] = None) -> "Budget":
        """Apply ``STRENGTHLAB_BUDGET``: a bare integer (pairs and search) or
        comma-separated ``pairs=..,basis=..,degree=..,search=..``."""
        base = base or cls()
        raw = os.environ.get("STRENGTHLAB_BUDGET", "").strip()
        if not raw:
            return base
        if raw.isdigit():
            return replace(base, max_pairs=int(raw), max_search=int(raw))
        names = {"pairs": "max_pairs", "basis": "max_basis", "degree": "max_degree", "search": "max_search"}
        updates = {}
        for item in raw.split(","):
            key, _, val = item.partition("=")
            key = key.strip()
            if key not in names:
                raise ValueError(f"unknown budget key {key!r} in STRENGTHLAB_BUDGET")
            updates[names[key]] = int(val)
        return replace(base, **updates)


_override: List[Budget] = []


def default_budget() -> Budget:
    return _override[-1] if _override else Budget.from_env()


@contextmanager
def use_budget(budget: Budget):
    """Make ``budget`` the default for computations inside the block."""
    _override.append(budget)
    try:
        yield budget
    finally:
        _override.pop()


class GroebnerBasis:
    """Reduced Groebner basis: monic elements sorted by descending leading monomial."""

    def __init__(self, ring: Ring, order: MonomialOrder, elements: List[Polynomial]):
        self.ring = ring
        self.order = order
        self.elements = elements
        self.leading = [g.leading_monomial(order) for g in elements]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def is_unit(self) -> bool:
        return any(sum(m) == 0 for m in self.leading)

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.ring != self.ring:
            raise RingMismatch("polynomial and basis live in different rings")
        r = _reduce(f.terms, self._pairs(), self.ring.field, self.order.key)
        return Polynomial(self.ring, r)

    def _pairs(self):
        return [(lt, g.terms, g.terms[lt]) for lt, g in zip(self.leading, self.elements)]

    def __repr__(self):
        return f"GroebnerBasis({[str(g) for g in self.elements]}, {self.order.value})"


def _reduce(terms: Dict, basis, F, key) -> Dict:
    """Full reduction of terms by basis [(lt, terms, lc)]."""
    p = dict(terms)
    r = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for lt, g, lc in basis:
            if mono_divides(lt, m):
                coef = c if lc == 1 else F.div(c, lc)
                F.sub_scaled(p, g, coef, mono_div(m, lt))
                p.pop(m, None)
                break
        else:
            r[m] = c
            del p[m]
    return r


def _monic(terms: Dict, F, key) -> Tuple[Monomial, Dict]:
    lt = max(terms, key=key)
    lc = terms[lt]
    if lc != 1:
        inv = F.inv(lc)
        terms = {m: F.mul(c, inv) for m, c in terms.items()}
    return lt, terms


def _spoly(a, b, F) -> Dict:
    """S-polynomial of monic (lt, terms) pairs."""
    lta, ga = a
    ltb, gb = b
    l = mono_lcm(lta, ltb)
    out = {}
    F.sub_scaled(out, ga, F.neg(F.one), mono_div(l, lta))
    F.sub_scaled(out, gb, F.one, mono_div(l, ltb))
    return out


def buchberger(
    I: Union[Ideal, Sequence[Polynomial]],
    order: MonomialOrder = GREVLEX,
    budget: Optional[Budget] = None,
) -> GroebnerBasis:
    """Reduced Groebner basis of I.

    Pairs are processed by the normal strategy (smallest lcm degree, then
    pair index). Pairs with coprime leading monomials are skipped, as are
    pairs eliminated by the chain criterion.
    """
    budget = budget or default_budget()
    if isinstance(I, Ideal):
        ring, gens = I.ring, list(I.generators)
    else:
        gens = [g for g in I if g]
        if not gens:
            raise ValueError("empty generator list; pass an Ideal to fix the ring")
        ring = gens[0].ring
    F = ring.field
    key = order.key
    if not gens:
        return GroebnerBasis(ring, order, [])

    G: List[Tuple[Monomial, Dict]] = []
    pairs = set()
    done = set()
    processed = 0

    def add(terms):
        lt, terms = _monic(terms, F, key)
        if sum(lt) > budget.max_degree:
            raise ResourceBudgetExceeded(f"basis element degree {sum(lt)} exceeds cap {budget.max_degree}")
        j = len(G)
        G.append((lt, terms))
        if len(G) > budget.max_basis:
            raise ResourceBudgetExceeded(f"basis size exceeds cap {budget.max_basis}")
        for i in range(j):
            pairs.add((i, j))

    def current():
        return [(lt, t, 1) for lt, t in G]

    for g in gens:
        r = _reduce(g.terms, current(), F, key)
        if r:
            if all(sum(m) == 0 for m in r):
                return GroebnerBasis(ring, order, [ring.one()])
            add(r)

    def pair_key(ij):
        i, j = ij
        l = mono_lcm(G[i][0], G[j][0])
        return (sum(l), key(l), i, j)

    while pairs:
        ij = min(pairs, key=pair_key)
        pairs.discard(ij)
        i, j = ij
        lti, ltj = G[i][0], G[j][0]
        done.add(ij)
        if mono_coprime(lti, ltj):
            continue
        l = mono_lcm(lti, ltj)
        if _chain_skip(i, j, l, G, done):
            continue
        processed += 1
        if processed > budget.max_pairs:
            raise ResourceBudgetExceeded(f"S-pair count exceeds cap {budget.max_pairs}")
        s = _spoly(G[i], G[j], F)
        r = _reduce(s, current(), F, key)
        if r:
            if all(sum(m) == 0 for m in r):
                return GroebnerBasis(ring, order, [ring.one()])
            add(r)

    return GroebnerBasis(ring, order, _interreduce(ring, G, F, key, order))


def _chain_skip(i, j, l, G, done) -> bool:
    for k in range(len(G)):
        if k in (i, j):
            continue
        if not mono_divides(G[k][0], l):
            continue
        a, b = (min(i, k), max(i, k)), (min(j, k), max(j, k))
        if a in done and b in done:
            return True
    return False


def _interreduce(ring, G, F, key, order) -> List[Polynomial]:
    # drop elements whose leading monomial is divisible by another's
    keep = []
    for idx, (lt, t) in enumerate(G):
        redundant = False
        for jdx, (lt2, _) in enumerate(G):
            if jdx == idx:
                continue
            if mono_divides(lt2, lt) and (lt2 != lt or jdx < idx):
                redundant = True
                break
        if not redundant:
            keep.append((lt, t))
    out = []
    for idx, (lt, t) in enumerate(keep):
        others = [(lt2, t2, 1) for jdx, (lt2, t2) in enumerate(keep) if jdx != idx]
        tail = dict(t)
        del tail[lt]
        r = _reduce(tail, others, F, key)
        r[lt] = F.one
        out.append(Polynomial(ring, r))
    out.sort(key=lambda g: key(g.leading_monomial(order)), reverse=True)
    return out


def normal_form(f: Polynomial, G: Union[GroebnerBasis, Ideal]) -> Polynomial:
    if isinstance(G, Ideal):
        G = G.groebner()
    return G.normal_form(f)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = GREVLEX) -> Polynomial:
    F = f.field
    a = _monic(f.terms, F, order.key)
    b = _monic(g.terms, F, order.key)
    return Polynomial(f.ring, _spoly(a, b, F))


def satisfies_buchberger_criterion(G: GroebnerBasis) -> bool:
    """Every S-polynomial of G reduces to zero modulo G."""
    for f, g in combinations(G.elements, 2):
        if G.normal_form(s_polynomial(f, g, G.order)):
            return False
    return True


def is_reduced(G: GroebnerBasis) -> bool:
    F = G.ring.field
    for idx, g in enumerate(G.elements):
        if g.terms[G.leading[idx]] != F.one:
            return False
        for jdx, lt in enumerate(G.leading):
            if jdx != idx and any(mono_divides(lt, m) for m in g.terms):
                return False
    return True


def ideal_member(f: Polynomial, I: Ideal, order: MonomialOrder = GREVLEX) -> bool:
    return not I.groebner(order).normal_form(f)


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """J is contained in I."""
    G = I.groebner()
    return all(not G.normal_form(g) for g in J.generators)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    if I.ring != J.ring:
        raise RingMismatch("ideals from different rings")
    return ideal_contains(I, J) and ideal_contains(J, I)


def max_independent_set(masks: Sequence[int], n: int) -> int:
    """Largest S (as a bitmask) with no mask contained in S; returns the mask."""
    masks = sorted(set(masks))
    if 0 in masks:
        raise UnitIdeal("ideal contains a unit")
    full = (1 << n) - 1

    def ok(S):
        return all(m & ~S for m in masks)

    # enumerate subsets by decreasing size; supersets of a bad set are bad,
    # so the first hit at a given size is maximal
    for size in range(n, -1, -1):
        for combo in combinations(range(n), size):
            S = 0
            for i in combo:
                S |= 1 << i
            if ok(S):
                return S
    return 0  # unreachable: the empty set is independent when 0 not in masks


def krull_dimension(I: Ideal, order: MonomialOrder = GREVLEX) -> int:
    """dim k[x]/I via the leading-term ideal of a Groebner basis."""
    n = I.ring.nvars
    if not I.generators:
        return n
    G = I.groebner(order)
    if G.is_unit():
        raise UnitIdeal("the ideal is the whole ring")
    S = max_independent_set([mono_support(m) for m in G.leading], n)
    return bin(S).count("1")


def codim(I: Ideal, order: MonomialOrder = GREVLEX) -> int:
    return I.ring.nvars - krull_dimension(I, order)


def is_unit_ideal(I: Ideal) -> bool:
    return bool(I.generators) and I.groebner().is_unit()


@dataclass(frozen=True)
class MinimalGenerators:
    mu: int
    nu: int
    by_degree: Dict[int, int]
    indices: Tuple[int, ...]


def minimal_generators(I: Ideal) -> MinimalGenerators:
    """Minimal homogeneous generator count by degree-wise linear algebra.

    In degree d, mu_d = dim I_d - dim (R_1 I_{d-1}); the selected indices are a
    minimal generating subset of the given generators (earliest first).
    """
    if any(g.is_constant() for g in I.generators):
        raise UnitIdeal("the ideal contains a nonzero constant")
    F = I.ring.field
    n = I.ring.nvars
    gens = I.generators
    degs = [g.degree() for g in gens]
    by_degree: Dict[int, int] = {}
    chosen: List[int] = []
    for d in sorted(set(degs)):
        span = SpanReducer(F)
        for g, e in zip(gens, degs):
            if e < d:
                for m in monomials_of_degree(n, d - e):
                    span.insert(g.mul_term(m, F.one).terms)
        base = span.rank
        for idx, (g, e) in enumerate(zip(gens, degs)):
            if e == d and span.insert(g.terms):
                chosen.append(idx)
        by_degree[d] = span.rank - base
    mu = sum(by_degree.values())
    nu = sum(d * k for d, k in by_degree.items())
    return MinimalGenerators(mu, nu, {d: k for d, k in by_degree.items() if k}, tuple(sorted(chosen)))


def minimal_generator_count(I: Ideal) -> Tuple[int, int]:
    """(mu, nu): number and degree sum of minimal generators."""
    mg = minimal_generators(I)
    return mg.mu, mg.nu
