"""Text formats: polynomials and ``.ideal`` files.

An ideal file looks like::

    # twisted cubic
    field Q
    vars x0 x1 x2 x3
    x0*x2 - x1^2
    x1*x3 - x2^2
    x0*x3 - x1*x2

Coefficients are integers, or ``a/b`` fractions (over F_p read as a * b^-1).
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from .errors import IdealSyntaxError, NonHomogeneous, UnknownVariable
from .field import Field, parse_field_spec
from .poly import Ideal, Polynomial, Ring

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^/]))")


def _tokens(text: str, line: Optional[int]):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise IdealSyntaxError(f"unexpected character {text[col - 1]!r}", line, col)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    return out


def parse_polynomial(text: str, ring: Ring, line: Optional[int] = None) -> Polynomial:
    """Parse ``x1^2*x2 - 3*x1*x3^2`` style text into a polynomial of ``ring``."""
    toks = _tokens(text, line)
    if not toks:
        raise IdealSyntaxError("empty polynomial", line, 1)
    index = {name: i for i, name in enumerate(ring.names)}
    F = ring.field
    n = ring.nvars
    terms = {}
    i = 0

    def expect_int():
        nonlocal i
        if i >= len(toks) or toks[i][0] != "num":
            col = toks[i][2] if i < len(toks) else len(text) + 1
            raise IdealSyntaxError("expected an integer", line, col)
        v = int(toks[i][1])
        i += 1
        return v

    first = True
    while i < len(toks):
        sign = 1
        if toks[i][0] == "op" and toks[i][1] in "+-":
            sign = -1 if toks[i][1] == "-" else 1
            i += 1
        elif not first:
            raise IdealSyntaxError(f"expected '+' or '-', got {toks[i][1]!r}", line, toks[i][2])
        first = False
        coef = Fraction(sign)
        expo = [0] * n
        factor_seen = False
        while True:
            if i >= len(toks):
                if not factor_seen:
                    raise IdealSyntaxError("dangling operator", line, len(text) + 1)
                break
            kind, val, col = toks[i]
            if kind == "num":
                i += 1
                num = int(val)
                if i < len(toks) and toks[i][1] == "/":
                    i += 1
                    den = expect_int()
                    if den == 0:
                        raise IdealSyntaxError("zero denominator", line, col)
                    coef *= Fraction(num, den)
                else:
                    coef *= num
            elif kind == "name":
                if val not in index:
                    raise UnknownVariable(f"unknown variable {val!r}", line, col)
                i += 1
                e = 1
                if i < len(toks) and toks[i][1] == "^":
                    i += 1
                    e = expect_int()
                expo[index[val]] += e
            else:
                raise IdealSyntaxError(f"unexpected {val!r}", line, col)
            factor_seen = True
            if i < len(toks) and toks[i][1] == "*":
                i += 1
                continue
            break
        m = tuple(expo)
        c = F.add(terms.get(m, F.zero), _coerce(F, coef, line))
        if F.is_zero(c):
            terms.pop(m, None)
        else:
            terms[m] = c
    return Polynomial(ring, terms)


def _coerce(F: Field, q: Fraction, line):
    if F.is_finite and q.denominator % F.p == 0:
        raise IdealSyntaxError(f"denominator divisible by {F.p}", line)
    return F(q)


def parse_ideal_text(text: str) -> Ideal:
    field = None
    ring = None
    gens: List[Polynomial] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if field is None:
            if not body.startswith("field"):
                raise IdealSyntaxError("first line must be 'field Q' or 'field F <p>'", lineno, 1)
            try:
                field = parse_field_spec(body[len("field"):])
            except IdealSyntaxError as e:
                raise IdealSyntaxError(str(e), lineno) from None
            continue
        if ring is None:
            parts = body.split()
            if parts[0] != "vars" or len(parts) < 2:
                raise IdealSyntaxError("second line must be 'vars <name> ...'", lineno, 1)
            names = parts[1:]
            for nm in names:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", nm):
                    raise IdealSyntaxError(f"bad variable name {nm!r}", lineno)
            if len(set(names)) != len(names):
                raise IdealSyntaxError("duplicate variable name", lineno)
            ring = Ring(field, len(names), tuple(names))
            continue
        f = parse_polynomial(body, ring, lineno)
        if not f.is_homogeneous():
            raise NonHomogeneous(f"polynomial {body!r} is not homogeneous", lineno)
        gens.append(f)
    if ring is None:
        raise IdealSyntaxError("missing field or vars line", None)
    return Ideal(ring, gens)


def parse_ideal_file(path) -> Ideal:
    return parse_ideal_text(Path(path).read_text())


def format_ideal(I: Ideal, comment: Optional[str] = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"field {I.ring.field.spec()}")
    lines.append("vars " + " ".join(I.ring.names))
    lines.extend(str(g) for g in I.generators)
    return "\n".join(lines) + "\n"
