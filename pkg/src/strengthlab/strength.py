"""Strength and collective strength of homogeneous forms.

Strength of f is the least k >= -1 with f = g_1 h_1 + ... + g_{k+1} h_{k+1},
all g_i, h_i homogeneous of positive degree. Three routes are provided:

* ``quadric_strength`` -- exact classification of quadrics over F_p from the
  rank and discriminant of the Gram matrix, with a constructive witness.
* ``strength_search`` -- exhaustive search over F_p for any degree.
* ``strength_lower_bound_jacobian`` -- a certified lower bound from the
  codimension of the gradient ideal.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field as dc_field
from itertools import combinations, combinations_with_replacement, product
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .differential import jacobian_minor_ideal, partial_derivative
from .errors import (
    NotHomogeneous,
    NotQuadric,
    ParamOutOfRange,
    SearchSpaceTooLarge,
    UnsupportedField,
)
from .groebner import Budget, codim, default_budget, ideal_equal
from .linalg import SpanReducer
from .poly import Ideal, Polynomial, Ring, monomials_of_degree

INFINITY = math.inf
Witness = List[Tuple[Polynomial, Polynomial]]


class LowerReason(enum.Enum):
    RANK_BOUND = "RankBound"
    JACOBIAN_BOUND = "JacobianBound"
    EXHAUSTIVE_SEARCH = "ExhaustiveSearch"
    ZERO = "Zero"


@dataclass
class StrengthCertificate:
    """Bracket lower <= strength <= upper; ``lower`` is None when unknown."""

    lower: Optional[int]
    upper: Union[int, float]
    lower_reason: LowerReason
    witness: Optional[Witness] = None

    @property
    def exact(self) -> bool:
        return self.lower is not None and self.lower == self.upper

    @property
    def value(self) -> int:
        if not self.exact:
            raise ValueError(f"strength not determined: {self.lower}..{self.upper}")
        return self.lower

    def verify(self, f: Polynomial) -> bool:
        """Check the invariants: bracket order and exact witness re-expansion."""
        if self.lower is not None and self.lower > self.upper:
            return False
        if self.witness is None:
            return True
        if len(self.witness) != self.upper + 1:
            return False
        total = f.ring.zero()
        for g, h in self.witness:
            if g.degree() < 1 or h.degree() < 1 or not g.is_homogeneous() or not h.is_homogeneous():
                return False
            total = total + g * h
        return total == f

    def to_dict(self) -> dict:
        return {
            "lower": "unknown" if self.lower is None else self.lower,
            "upper": "infinity" if self.upper == INFINITY else self.upper,
            "lower_reason": self.lower_reason.value,
            "witness": None if self.witness is None else [[str(g), str(h)] for g, h in self.witness],
        }


def _zero_certificate() -> StrengthCertificate:
    return StrengthCertificate(-1, -1, LowerReason.ZERO, [])


# --- quadrics ---------------------------------------------------------------


def diagonalize_quadric(f: Polynomial) -> List[Tuple[object, Polynomial]]:
    """Write a quadric as sum a_i * y_i^2 with linearly independent linear forms y_i.

    Lagrange reduction; needs char != 2. Length of the result is the Gram rank.
    """
    ring = f.ring
    F = ring.field
    n = ring.nvars
    half = F.inv(F(2))
    q = f
    out = []
    while q:
        sq = None
        for k in range(n):
            e = [0] * n
            e[k] = 2
            a = q.coefficient(tuple(e))
            if not F.is_zero(a):
                sq = (k, a)
                break
        if sq is not None:
            k, a = sq
            ell = partial_derivative(q, k).scale(half)
            q = q - (ell * ell).scale(F.inv(a))
            out.append((F.inv(a), ell))
            continue
        # no squares left: split off a hyperbolic plane from the first mixed term
        m, b = q.sorted_terms()[0]
        i, j = [v for v, e in enumerate(m) if e]
        l1 = partial_derivative(q, j)
        l2 = partial_derivative(q, i)
        q = q - (l1 * l2).scale(F.inv(b))
        c = F.inv(F.mul(F(4), b))
        out.append((c, l1 + l2))
        out.append((F.neg(c), l1 - l2))
    return out


def quadric_rank(f: Polynomial) -> int:
    return len(diagonalize_quadric(f))


def _check_quadric(f: Polynomial):
    if not f.is_homogeneous() or f.degree() != 2:
        raise NotQuadric(f"expected a quadratic form, got degree {f.degree()}")


def quadric_strength_formula(rank: int, disc_is_square: bool, p: int) -> int:
    """Strength of a rank-r quadric over F_p (p odd) from its square class."""
    if rank == 0:
        return -1
    if rank % 2:
        return (rank - 1) // 2
    half = rank // 2
    # (-1)^{r/2} * d square  <=>  hyperbolic
    minus_one_square = p % 4 == 1
    sign_square = True if half % 2 == 0 else minus_one_square
    hyperbolic = sign_square == disc_is_square
    return half - 1 if hyperbolic else half


def quadric_strength(f: Polynomial) -> StrengthCertificate:
    """Exact strength of a quadratic form over F_p, bounds over Q."""
    if not f:
        return _zero_certificate()
    _check_quadric(f)
    F = f.field
    diag = diagonalize_quadric(f)
    r = len(diag)
    if not F.is_finite:
        return _quadric_bounds_rational(f, diag)
    disc = 1
    for a, _ in diag:
        disc = F.mul(disc, a)
    s = quadric_strength_formula(r, F.is_square(disc), F.p)
    witness = _witt_witness(f.ring, diag)
    if len(witness) != s + 1:
        raise AssertionError(f"witness length {len(witness)} disagrees with classification {s}")
    return StrengthCertificate(s, s, LowerReason.RANK_BOUND, witness)


def _witt_witness(ring: Ring, diag) -> Witness:
    """Products of linear forms realising the hyperbolic/anisotropic split."""
    F = ring.field
    p = F.p
    if p % 4 == 3:
        nu = p - 1  # -1 is a non-square
    else:
        nu = F.nonsquare()
    ones, nus = [], []
    for a, y in diag:
        if F.is_square(a):
            ones.append(y.scale(F.sqrt(a)))
        else:
            nus.append(y.scale(F.sqrt(F.div(a, nu))))
    W: Witness = []
    if p % 4 == 1:
        iota = F.sqrt(p - 1)
        for cls, coeff in ((ones, 1), (nus, nu)):
            while len(cls) >= 2:
                za, zb = cls.pop(0), cls.pop(0)
                W.append(((za + zb.scale(iota)).scale(coeff), za - zb.scale(iota)))
            for z in cls:
                W.append((z.scale(coeff), z))
        return W
    # p = 3 mod 4: form is sum(ones^2) - sum(nus^2)
    while ones and nus:
        z, w = ones.pop(0), nus.pop(0)
        W.append((z - w, z + w))
    rest, sigma = (ones, 1) if ones else (nus, p - 1)
    u, v = _sum_of_two_squares(F, p - 1)
    while rest:
        group, rest = rest[:4], rest[4:]
        if len(group) == 1:
            (z,) = group
            W.append((z.scale(sigma), z))
        elif len(group) == 2:
            for z in group:
                W.append((z.scale(sigma), z))
        else:
            z1, z2 = group[0], group[1]
            # z1^2 + z2^2 = -(w1^2 + w2^2) since u^2 + v^2 = -1
            w1 = z1.scale(u) + z2.scale(v)
            w2 = z1.scale(v) - z2.scale(u)
            z3 = group[2]
            W.append(((z3 - w1).scale(sigma), z3 + w1))
            if len(group) == 4:
                z4 = group[3]
                W.append(((z4 - w2).scale(sigma), z4 + w2))
            else:
                W.append((w2.scale(F.neg(sigma)), w2))
    return W


def _sum_of_two_squares(F, target) -> Tuple[int, int]:
    squares = {F.mul(u, u): u for u in range(F.p)}
    for v in range(F.p):
        rem = F.sub(target, F.mul(v, v))
        if rem in squares:
            return squares[rem], v
    raise AssertionError("every element of F_p is a sum of two squares")


def _quadric_bounds_rational(f: Polynomial, diag) -> StrengthCertificate:
    F = f.field
    r = len(diag)
    lower = -(-r // 2) - 1
    items = list(diag)
    W: Witness = []
    while items:
        a, y = items.pop(0)
        for idx, (b, z) in enumerate(items):
            ratio = F.neg(F.div(b, a))
            if F.is_rational_square(ratio):
                t = F.rational_sqrt(ratio)
                W.append(((y - z.scale(t)).scale(a), y + z.scale(t)))
                items.pop(idx)
                break
        else:
            W.append((y.scale(a), y))
    return StrengthCertificate(lower, len(W) - 1, LowerReason.RANK_BOUND, W)


# --- exhaustive search ------------------------------------------------------


def gaussian_binomial(N: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^N."""
    if k < 0 or k > N:
        return 0
    num, den = 1, 1
    for i in range(k):
        num *= q ** (N - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def subspace_bases(N: int, k: int, p: int):
    """Yield each k-dim subspace of F_p^N once, as its reduced row echelon basis."""
    for pivots in combinations(range(N), k):
        pivset = set(pivots)
        free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, N) if j not in pivset]
        for values in product(range(p), repeat=len(free)):
            rows = [[0] * N for _ in range(k)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, j), v in zip(free, values):
                rows[i][j] = v
            yield rows


def degree_patterns(d: int, k: int):
    """Non-decreasing (a_1..a_{k+1}) with 1 <= a_i <= d // 2."""
    return list(combinations_with_replacement(range(1, d // 2 + 1), k + 1))


def _pattern_size(pattern, n: int, p: int) -> int:
    size = 1
    for a in set(pattern):
        size *= gaussian_binomial(len(monomials_of_degree(n, a)), pattern.count(a), p)
    return size


def search_space_size(n: int, d: int, k: int, p: int) -> int:
    return sum(_pattern_size(pat, n, p) for pat in degree_patterns(d, k))


def _pattern_candidates(ring: Ring, pattern):
    """Yield lists of g's (forms) realising one degree pattern."""
    n, p = ring.nvars, ring.field.p
    blocks = []
    for a in sorted(set(pattern)):
        basis = monomials_of_degree(n, a)
        forms = [
            [ring.from_dict({m: c for m, c in zip(basis, row) if c}) for row in rows]
            for rows in subspace_bases(len(basis), pattern.count(a), p)
        ]
        blocks.append(forms)
    for choice in product(*blocks):
        yield [g for block in choice for g in block]


def _multiples(g: Polynomial, d: int):
    n = g.ring.nvars
    one = g.field.one
    return [(m, g.mul_term(m, one).terms) for m in monomials_of_degree(n, d - g.degree())]


def _in_span(f: Polynomial, gs: Sequence[Polynomial], d: int) -> bool:
    sr = SpanReducer(f.field)
    for g in gs:
        for _, vec in _multiples(g, d):
            sr.insert(vec)
    return sr.contains(f.terms)


def _solve_witness(f: Polynomial, gs: Sequence[Polynomial], d: int) -> Witness:
    ring = f.ring
    sr = SpanReducer(f.field, track=True)
    for i, g in enumerate(gs):
        for m, vec in _multiples(g, d):
            sr.insert(vec, (i, m))
    combo = sr.solve(f.terms)
    if combo is None:
        raise AssertionError("membership and solve disagree")
    hs = [{} for _ in gs]
    for (i, m), c in combo.items():
        hs[i][m] = c
    return [(g, ring.from_dict(h)) for g, h in zip(gs, hs)]


def strength_search(
    f: Polynomial, k_max: int = 3, budget: Optional[Budget] = None
) -> StrengthCertificate:
    """Exhaustive strength search over F_p up to k_max summands minus one.

    Candidates for the g_i range over subspaces (reduced echelon bases) of
    each degree block rather than ordered tuples: if some g's of equal degree
    are dependent a shorter decomposition exists, and the ideal they generate
    depends only on their span.
    """
    if not f:
        return _zero_certificate()
    if not f.is_homogeneous():
        raise NotHomogeneous("strength is defined for homogeneous forms")
    F = f.field
    if not F.is_finite:
        raise UnsupportedField("exhaustive strength search needs a finite field")
    d = f.degree()
    if d < 2:
        raise ParamOutOfRange("strength search needs degree >= 2")
    budget = budget or default_budget()
    n, p = f.ring.nvars, F.p
    for k in range(k_max + 1):
        size = search_space_size(n, d, k, p)
        if size > budget.max_search:
            raise SearchSpaceTooLarge(size, budget.max_search)
        for pattern in degree_patterns(d, k):
            for gs in _pattern_candidates(f.ring, pattern):
                if _in_span(f, gs, d):
                    return StrengthCertificate(k, k, LowerReason.EXHAUSTIVE_SEARCH, _solve_witness(f, gs, d))
    return StrengthCertificate(k_max + 1, INFINITY, LowerReason.EXHAUSTIVE_SEARCH, None)


# --- bounds and dispatch ----------------------------------------------------


def strength_lower_bound_jacobian(f: Polynomial) -> int:
    """ceil(codim J_1((f)) / 2) - 1, a lower bound on strength."""
    if not f.is_homogeneous():
        raise NotHomogeneous("expected a homogeneous form")
    if f.degree() < 2:
        raise ParamOutOfRange("need degree >= 2")
    J = jacobian_minor_ideal(Ideal(f.ring, [f]), 1)
    c = codim(J)
    return -(-c // 2) - 1


def variable_split_witness(f: Polynomial) -> Witness:
    """f = sum_i x_i * h_i grouping terms by their first variable (at most n summands)."""
    ring = f.ring
    parts: Dict[int, dict] = {}
    for m, c in f.terms.items():
        i = next(v for v, e in enumerate(m) if e)
        q = m[:i] + (m[i] - 1,) + m[i + 1 :]
        parts.setdefault(i, {})[q] = c
    return [(ring.var(i), Polynomial(ring, parts[i])) for i in sorted(parts)]


def strength(f: Polynomial, k_max: int = 3, method: str = "auto", budget: Optional[Budget] = None) -> StrengthCertificate:
    """Best available certificate.

    ``method``: "auto" uses the quadric oracle for quadrics over F_p and the
    search otherwise; "search" forces the search; "bound" never searches.
    """
    if not f:
        return _zero_certificate()
    F = f.field
    d = f.degree()
    if method not in ("auto", "search", "bound"):
        raise ValueError(f"unknown method {method!r}")
    if method == "search" and not F.is_finite:
        raise UnsupportedField("exhaustive strength search needs a finite field")
    if F.is_finite and method != "bound":
        if d == 2 and method == "auto":
            return quadric_strength(f)
        return strength_search(f, k_max, budget)
    if d == 2:
        return quadric_strength(f)
    lower = strength_lower_bound_jacobian(f)
    W = variable_split_witness(f)
    cert = StrengthCertificate(lower, len(W) - 1, LowerReason.JACOBIAN_BOUND, W)
    return cert


# --- collective strength and generator reduction ----------------------------


def projective_points(m: int, p: int):
    """Nonzero vectors in F_p^m with first nonzero entry 1, lexicographic order."""
    for lead in range(m):
        for tail in product(range(p), repeat=m - lead - 1):
            yield (0,) * lead + (1,) + tail


@dataclass
class CollectiveStrength:
    certificate: StrengthCertificate
    coefficients: Tuple[int, ...]
    combination: Polynomial

    def to_dict(self) -> dict:
        out = self.certificate.to_dict()
        out["coefficients"] = list(self.coefficients)
        out["combination"] = str(self.combination)
        return out


def collective_strength(
    fs: Sequence[Polynomial], k_max: int = 3, method: str = "auto", budget: Optional[Budget] = None
) -> CollectiveStrength:
    """Minimum strength over non-trivial homogeneous combinations (over F_p).

    Combinations only mix forms of one degree. Among minimisers the
    lexicographically first coefficient vector wins.
    """
    fs = list(fs)
    if not fs:
        raise ParamOutOfRange("need at least one form")
    ring = fs[0].ring
    F = ring.field
    if not F.is_finite:
        raise UnsupportedField("collective strength is only computed exactly over F_p")
    for g in fs:
        if not g.is_homogeneous():
            raise NotHomogeneous("forms must be homogeneous")
    budget = budget or default_budget()
    r = len(fs)
    classes: Dict[int, List[int]] = {}
    for i, g in enumerate(fs):
        classes.setdefault(g.degree(), []).append(i)
    n_combos = sum((F.p ** len(ix) - 1) // (F.p - 1) for ix in classes.values())
    if n_combos > budget.max_search:
        raise SearchSpaceTooLarge(n_combos, budget.max_search)

    best = None
    lowers = []
    for deg in sorted(classes):
        idx = classes[deg]
        for point in projective_points(len(idx), F.p):
            coeffs = [0] * r
            for i, a in zip(idx, point):
                coeffs[i] = a
            comb_poly = ring.zero()
            for g, a in zip(fs, coeffs):
                if a:
                    comb_poly = comb_poly + g.scale(a)
            cert = strength(comb_poly, k_max, method, budget)
            lowers.append(cert.lower)
            key = (cert.upper, tuple(coeffs))
            if best is None or key < best[0]:
                best = (key, cert, tuple(coeffs), comb_poly)
    _, cert, coeffs, comb_poly = best
    # the minimum is only certified if no other combination could undercut it
    lower = None if None in lowers else min(lowers)
    if lower != cert.lower:
        cert = StrengthCertificate(lower, cert.upper, cert.lower_reason, cert.witness)
    return CollectiveStrength(cert, coeffs, comb_poly)


@dataclass
class ReducedGenerators:
    generators: List[Polynomial]
    certificates: List[StrengthCertificate]
    coefficients: List[Tuple[int, ...]] = dc_field(default_factory=list)

    @property
    def strengths(self) -> List[Union[int, float]]:
        return [c.value if c.exact else None for c in self.certificates]

    def to_dict(self) -> dict:
        return {
            "generators": [str(g) for g in self.generators],
            "strengths": [c.to_dict() for c in self.certificates],
        }


def reduce_generators(
    gens: Union[Ideal, Sequence[Polynomial]], k_max: int = 3, method: str = "auto", budget: Optional[Budget] = None
) -> ReducedGenerators:
    """Reorder/replace generators so strength(g_k) = collective strength of g_1..g_k.

    Works from the last position down: take a minimising combination of the
    current list, drop the last generator with a nonzero coefficient in it,
    and put the combination at the end.
    """
    current = list(gens.generators if isinstance(gens, Ideal) else gens)
    tail: List[Polynomial] = []
    certs: List[StrengthCertificate] = []
    coeff_log: List[Tuple[int, ...]] = []
    while current:
        if len(current) == 1:
            cert = strength(current[0], k_max, method, budget)
            tail.append(current[0])
            certs.append(cert)
            coeff_log.append((1,))
            break
        res = collective_strength(current, k_max, method, budget)
        t = max(i for i, a in enumerate(res.coefficients) if a)
        tail.append(res.combination)
        certs.append(res.certificate)
        coeff_log.append(res.coefficients)
        current = current[:t] + current[t + 1 :]
    tail.reverse()
    certs.reverse()
    coeff_log.reverse()
    return ReducedGenerators(tail, certs, coeff_log)


def generates_same_ideal(original: Sequence[Polynomial], reduced: Sequence[Polynomial]) -> bool:
    ring = original[0].ring
    return ideal_equal(Ideal(ring, list(original)), Ideal(ring, list(reduced)))
