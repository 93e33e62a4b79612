"""Sparse multivariate polynomials over exact fields.

Monomials are plain exponent tuples; a polynomial is a dict from exponent
tuple to a nonzero raw coefficient. Everything that prints or iterates terms
for output goes through ``sorted_terms`` (descending graded reverse
lexicographic by default) so output is reproducible.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field as dc_field
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import NotHomogeneous, RingMismatch, VariableOutOfRange
from .field import Field

Monomial = Tuple[int, ...]


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def mono_support(m: Monomial) -> int:
    """Bitmask of variables occurring in m."""
    mask = 0
    for i, e in enumerate(m):
        if e:
            mask |= 1 << i
    return mask


def _grevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


def _grlex_key(m):
    return (sum(m), m)


def _lex_key(m):
    return m


class MonomialOrder(enum.Enum):
    GREVLEX = "grevlex"
    LEX = "lex"
    GRLEX = "grlex"

    @property
    def key(self):
        return _ORDER_KEYS[self]

    @classmethod
    def parse(cls, name: str) -> "MonomialOrder":
        return cls(name.lower())


_ORDER_KEYS = {
    MonomialOrder.GREVLEX: _grevlex_key,
    MonomialOrder.LEX: _lex_key,
    MonomialOrder.GRLEX: _grlex_key,
}

GREVLEX = MonomialOrder.GREVLEX


@dataclass(frozen=True)
class Ring:
    """k[x_1..x_n] with fixed variable count and display names."""

    field: Field
    nvars: int
    names: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.nvars < 0:
            raise ValueError("negative variable count")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{i + 1}" for i in range(self.nvars)))
        elif len(self.names) != self.nvars:
            raise ValueError("need one name per variable")

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if not self.field.is_zero(c) else {})

    def var(self, i: int) -> "Polynomial":
        if not 0 <= i < self.nvars:
            raise VariableOutOfRange(f"variable index {i} not in [0, {self.nvars})")
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self) -> List["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, m: Monomial, c=1) -> "Polynomial":
        return Polynomial(self, {tuple(m): self.field(c)})

    def from_dict(self, terms) -> "Polynomial":
        """Build from a {monomial: coefficient} mapping, coercing and dropping zeros."""
        out = {}
        for m, c in terms.items():
            c = self.field(c)
            if not self.field.is_zero(c):
                out[tuple(m)] = c
        return Polynomial(self, out)


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Dict[Monomial, object]):
        # terms must already be coerced and free of zeros; use Ring.from_dict otherwise
        self.ring = ring
        self.terms = terms

    @property
    def field(self) -> Field:
        return self.ring.field

    def _same(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, m: Monomial):
        return self.terms.get(tuple(m), self.field.zero)

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_term(self, order: MonomialOrder = GREVLEX):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Monomial:
        return self.leading_term(order)[0]

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        self._same(other)
        F = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = F.add(out.get(m, F.zero), c)
            if F.is_zero(v):
                out.pop(m, None)
            else:
                out[m] = v
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Polynomial(self.ring, {m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = self.ring.constant(other)
        self._same(other)
        out = dict(self.terms)
        self.field.sub_scaled(out, other.terms, self.field.one)
        return Polynomial(self.ring, out)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        F = self.field
        c = F(c)
        if F.is_zero(c):
            return self.ring.zero()
        return Polynomial(self.ring, {m: F.mul(v, c) for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._same(other)
        F = self.field
        out: Dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = F.add(out.get(m, F.zero), F.mul(c1, c2))
        return Polynomial(self.ring, {m: c for m, c in out.items() if not F.is_zero(c)})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, m: Monomial, c) -> "Polynomial":
        F = self.field
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(k, m)): F.mul(v, c) for k, v in self.terms.items()},
        )

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        return self.scale(self.field.inv(c))

    def compose(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute images[i] for variable i."""
        if len(images) != self.ring.nvars:
            raise VariableOutOfRange("need one image per variable")
        target = images[0].ring if images else self.ring
        result = target.zero()
        for m, c in self.terms.items():
            t = target.constant(c)
            for i, e in enumerate(m):
                if e:
                    t = t * images[i] ** e
            result = result + t
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if not self.terms:
            return other == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def format_polynomial(f: Polynomial, order: MonomialOrder = GREVLEX) -> str:
    if not f.terms:
        return "0"
    F = f.field
    names = f.ring.names
    pieces = []
    for m, c in f.sorted_terms(order):
        s = F.to_str(c)
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        powers = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e]
        if not powers:
            body = s
        elif s == "1":
            body = "*".join(powers)
        else:
            body = "*".join([s] + powers)
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)


def monomials_of_degree(nvars: int, d: int) -> List[Monomial]:
    """All exponent tuples of total degree d, descending grevlex."""
    if d < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=_grevlex_key, reverse=True)
    return out


def graded_piece_basis(ring: Ring, d: int) -> List[Monomial]:
    """Monomial basis of the degree-d piece, count C(n+d-1, d)."""
    basis = monomials_of_degree(ring.nvars, d)
    assert len(basis) == (comb(ring.nvars + d - 1, d) if ring.nvars else int(d == 0))
    return basis


def make_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_homogeneous(ring: Ring, d: int, seed) -> Polynomial:
    """Random nonzero form of degree d.

    Coefficients are uniform over F_p, or integers in [-3, 3] over Q. ``seed``
    may be an int, a ``SeedSequence`` or an existing ``Generator`` (which is
    then advanced).
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    rng = make_rng(seed)
    basis = monomials_of_degree(ring.nvars, d)
    F = ring.field
    while True:
        if F.is_finite:
            coeffs = rng.integers(0, F.p, size=len(basis))
        else:
            coeffs = rng.integers(-3, 4, size=len(basis))
        f = ring.from_dict({m: int(c) for m, c in zip(basis, coeffs)})
        if f:
            return f


@dataclass
class Ideal:
    """Homogeneous ideal given by an ordered generator list.

    Zero generators are dropped. The reduced Groebner basis per monomial order
    is computed lazily and cached (single writer; see ``groebner``).
    """

    ring: Ring
    generators: List[Polynomial]
    _gb_cache: dict = dc_field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        gens = []
        for g in self.generators:
            if g.ring != self.ring:
                raise RingMismatch("generator from a different ring")
            if not g.is_homogeneous():
                raise NotHomogeneous(f"generator {g} is not homogeneous")
            if g:
                gens.append(g)
        self.generators = gens

    @classmethod
    def of(cls, gens: Iterable[Polynomial], ring: Optional[Ring] = None) -> "Ideal":
        gens = list(gens)
        if ring is None:
            ring = gens[0].ring
        return cls(ring, gens)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def degrees(self) -> List[int]:
        return [g.degree() for g in self.generators]

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingMismatch("ideals from different rings")
        return Ideal(self.ring, self.generators + other.generators)

    def groebner(self, order: MonomialOrder = GREVLEX, budget=None):
        gb = self._gb_cache.get(order)
        if gb is None:
            from .groebner import buchberger

            gb = buchberger(self, order, budget)
            self._gb_cache[order] = gb
        return gb

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"
