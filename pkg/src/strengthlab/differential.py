"""Jacobian matrices, minor ideals J_c(Q) and Jacobian singular ideals."""

from __future__ import annotations

import math
import warnings
from itertools import combinations, permutations
from typing import List, Optional, Sequence, Union

from .errors import CodimMismatch, InvalidMinorSize, UnitIdeal, VariableOutOfRange
from .groebner import codim, is_unit_ideal
from .poly import Ideal, Polynomial, Ring

INFINITY = math.inf


def partial_derivative(f: Polynomial, j: int) -> Polynomial:
    """Formal derivative in variable j; exponents are reduced in the field."""
    ring = f.ring
    if not 0 <= j < ring.nvars:
        raise VariableOutOfRange(f"variable index {j} not in [0, {ring.nvars})")
    F = ring.field
    out = {}
    for m, c in f.terms.items():
        e = m[j]
        if e == 0:
            continue
        v = F.mul(c, F(e))
        if F.is_zero(v):
            continue
        dm = m[:j] + (e - 1,) + m[j + 1 :]
        out[dm] = v
    return Polynomial(ring, out)


def gradient(f: Polynomial) -> List[Polynomial]:
    return [partial_derivative(f, j) for j in range(f.ring.nvars)]


class JacobianMatrix:
    """r x n matrix with entry (i, j) = d f_i / d x_j."""

    def __init__(self, source: Union[Ideal, Sequence[Polynomial]]):
        gens = list(source.generators if isinstance(source, Ideal) else source)
        self.source = gens
        self.entries = [gradient(f) for f in gens]

    @property
    def shape(self):
        n = len(self.entries[0]) if self.entries else 0
        return len(self.entries), n

    def submatrix(self, rows, cols) -> List[List[Polynomial]]:
        return [[self.entries[i][j] for j in cols] for i in rows]

    def minors(self, c: int) -> List[Polynomial]:
        """All c x c minors; row subsets outer, column subsets inner, both lexicographic."""
        r, n = self.shape
        if not 1 <= c <= min(r, n):
            raise InvalidMinorSize(f"minor size {c} not in [1, {min(r, n)}]")
        return [
            determinant(self.submatrix(rows, cols))
            for rows in combinations(range(r), c)
            for cols in combinations(range(n), c)
        ]


def determinant(M: List[List[Polynomial]]) -> Polynomial:
    """Cofactor expansion along the first row."""
    k = len(M)
    if k == 1:
        return M[0][0]
    if k == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    ring = M[0][0].ring
    total = ring.zero()
    for j in range(k):
        if not M[0][j]:
            continue
        minor = [row[:j] + row[j + 1 :] for row in M[1:]]
        term = M[0][j] * determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _perm_sign(p) -> int:
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def determinant_leibniz(M: List[List[Polynomial]]) -> Polynomial:
    """Permutation-sum determinant; used to cross-check the cofactor version."""
    k = len(M)
    ring = M[0][0].ring
    total = ring.zero()
    for p in permutations(range(k)):
        term = ring.one()
        for i in range(k):
            term = term * M[i][p[i]]
        total = total + term if _perm_sign(p) > 0 else total - term
    return total


def jacobian_minor_ideal(Q: Ideal, c: int) -> Ideal:
    """J_c(Q): the ideal of c x c minors of the Jacobian of Q's generators (zeros dropped)."""
    return Ideal(Q.ring, [m for m in JacobianMatrix(Q).minors(c) if m])


def singular_locus_ideal(Q: Ideal, c: Optional[int] = None) -> Ideal:
    """Jacobian singular ideal Q + J_c(Q), with c = codim(Q) unless given.

    This equals the ideal of the singular locus only when Q is radical and
    equidimensional over a perfect field; that is assumed, not checked.
    """
    actual = codim(Q)
    if c is None:
        c = actual
    elif c != actual:
        warnings.warn(f"explicit c={c} differs from codim(Q)={actual}", CodimMismatch, stacklevel=2)
    if c == 0:
        # zero ideal: no minors to take; the whole space is smooth
        return Ideal(Q.ring, [Q.ring.one()])
    return Q + jacobian_minor_ideal(Q, c)


def nonsingular_codim(Q: Ideal) -> Union[int, float]:
    """Codimension of the Jacobian singular locus inside V(Q).

    Returns codim(Q + J_c(Q)) - codim(Q), or ``math.inf`` when Q + J_c(Q) is
    the unit ideal. V(Q) is nonsingular in codimension k iff the result is > k.
    """
    if is_unit_ideal(Q):
        raise UnitIdeal("Q is the unit ideal")
    c = codim(Q)
    S = singular_locus_ideal(Q, c)
    if is_unit_ideal(S):
        return INFINITY
    return codim(S) - c
