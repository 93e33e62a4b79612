"""Exact coefficient fields: F_p for odd primes p, and the rationals.

Polynomials store *raw* coefficients (plain ``int`` residues for F_p,
``fractions.Fraction`` for Q) and call into the field object for arithmetic.
``FieldElement`` wraps a raw value together with its field for callers who
want checked scalar arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .errors import (
    Char2Unsupported,
    DivisionByZero,
    FieldMismatch,
    IdealSyntaxError,
    UnsupportedField,
    ZeroInput,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if self.p == 2:
            raise Char2Unsupported("characteristic 2 is not supported")
        if not is_prime(self.p):
            raise UnsupportedField(f"{self.p} is not prime")

    is_finite = True

    @property
    def characteristic(self) -> int:
        return self.p

    zero = 0
    one = 1

    def __call__(self, x) -> int:
        if isinstance(x, Fraction):
            return self.div(x.numerator % self.p, x.denominator % self.p)
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def sub_scaled(self, target: dict, source: dict, coef, shift=None) -> None:
        """In place: target -= coef * x^shift * source."""
        p = self.p
        for m, c in source.items():
            if shift is not None:
                m = tuple(a + b for a, b in zip(m, shift))
            v = (target.get(m, 0) - coef * c) % p
            if v:
                target[m] = v
            else:
                target.pop(m, None)

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def nonzero_elements(self) -> Iterator[int]:
        return iter(range(1, self.p))

    def is_square(self, a) -> bool:
        a %= self.p
        if a == 0:
            raise ZeroInput("square-class test of zero")
        return pow(a, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, a) -> int:
        """A square root of a (Tonelli-Shanks); raises ValueError for non-squares."""
        p = self.p
        a %= p
        if a == 0:
            return 0
        if not self.is_square(a):
            raise ValueError(f"{a} is not a square mod {p}")
        if p % 4 == 3:
            return pow(a, (p + 1) // 4, p)
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, r = t * c % p, r * b % p
        return r

    def nonsquare(self) -> int:
        for a in range(2, self.p):
            if not self.is_square(a):
                return a
        raise AssertionError("unreachable for odd p")

    def to_str(self, a) -> str:
        # symmetric representative reads better and parses back to the same residue
        a %= self.p
        return str(a - self.p if a > self.p // 2 else a)

    def spec(self) -> str:
        return f"F {self.p}"

    def __str__(self):
        return f"F_{self.p}"


@dataclass(frozen=True)
class Rationals:
    is_finite = False
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero")
        return Fraction(a) / b

    def is_zero(self, a) -> bool:
        return a == 0

    def sub_scaled(self, target: dict, source: dict, coef, shift=None) -> None:
        for m, c in source.items():
            if shift is not None:
                m = tuple(a + b for a, b in zip(m, shift))
            v = target.get(m, 0) - coef * c
            if v:
                target[m] = v
            else:
                target.pop(m, None)

    def is_square(self, a) -> bool:
        raise UnsupportedField("square-class test over Q is not implemented")

    def is_rational_square(self, a) -> bool:
        """Exact test used for greedy pairing over Q (not a square-class oracle)."""
        from math import isqrt

        a = Fraction(a)
        if a < 0:
            return False
        n, d = a.numerator, a.denominator
        return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d

    def rational_sqrt(self, a) -> Fraction:
        from math import isqrt

        a = Fraction(a)
        return Fraction(isqrt(a.numerator), isqrt(a.denominator))

    def to_str(self, a) -> str:
        return str(a)

    def spec(self) -> str:
        return "Q"

    def __str__(self):
        return "Q"


Field = Union[PrimeField, Rationals]
QQ = Rationals()


def parse_field_spec(text: str) -> Field:
    """Parse ``Q`` or ``F <p>`` (the part after the ``field`` keyword)."""
    parts = text.split()
    if parts == ["Q"]:
        return QQ
    if len(parts) == 2 and parts[0] == "F":
        try:
            p = int(parts[1])
        except ValueError:
            raise IdealSyntaxError(f"bad characteristic {parts[1]!r}") from None
        return PrimeField(p)
    raise IdealSyntaxError(f"unrecognised field spec {text!r}; expected 'Q' or 'F <p>'")


@dataclass(frozen=True)
class FieldElement:
    field: Field
    value: object

    def __post_init__(self):
        object.__setattr__(self, "value", self.field(self.value))

    def _check(self, other) -> "FieldElement":
        if not isinstance(other, FieldElement):
            return FieldElement(self.field, other)
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.div(self.value, other.value))

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def is_square(self) -> bool:
        return self.field.is_square(self.value)

    def __str__(self):
        return self.field.to_str(self.value)
