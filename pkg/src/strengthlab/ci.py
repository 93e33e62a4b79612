"""Complete-intersection tests, hypothesis reports and the Jacobian-strength harness."""

from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass, field as dc_field
from typing import List, Optional, Union

import numpy as np

from .differential import jacobian_minor_ideal, nonsingular_codim
from .errors import ParamOutOfRange
from .field import QQ, PrimeField
from .groebner import codim, minimal_generators
from .poly import Ideal, Polynomial, Ring, random_homogeneous
from .io import format_ideal

INFINITY = math.inf


def ci_test(Q: Ideal) -> bool:
    """Q is a complete intersection iff mu(Q) == codim(Q)."""
    return minimal_generators(Q).mu == codim(Q)


@dataclass
class CIReport:
    codim: int
    degree_bound_inputs: List[int]
    mu: int
    nu: int
    sing_codim: Union[int, float]
    is_ci: bool
    prime_advisory: bool
    degree: str = "not computed"
    assumptions: str = "Q assumed radical and equidimensional; singular ideal is the Jacobian singular ideal"

    def consistent(self) -> bool:
        return self.is_ci == (self.mu == self.codim) and self.prime_advisory == (
            self.sing_codim >= 2 * self.codim + 2
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        if d["sing_codim"] == INFINITY:
            d["sing_codim"] = "infinity"
        return d


def hypothesis_report(Q: Ideal) -> CIReport:
    c = codim(Q)
    mg = minimal_generators(Q)
    sc = nonsingular_codim(Q)
    return CIReport(
        codim=c,
        degree_bound_inputs=Q.degrees(),
        mu=mg.mu,
        nu=mg.nu,
        sing_codim=sc,
        is_ci=mg.mu == c,
        prime_advisory=sc >= 2 * c + 2,
    )


# --- instance generation ----------------------------------------------------


class InstanceKind(enum.Enum):
    COMPLETE_INTERSECTION = "CompleteIntersection"
    LOW_STRENGTH = "LowStrength"
    DETERMINANTAL = "Determinantal"
    FERMAT = "Fermat"

    @classmethod
    def parse(cls, name: str) -> "InstanceKind":
        for k in cls:
            if name.lower() in (k.value.lower(), k.name.lower(), k.name.lower().replace("_", "-")):
                return k
        raise ParamOutOfRange(f"unknown instance kind {name!r}")


@dataclass
class InstanceParams:
    """Knobs for ``generate_instance``; p = 0 means the rationals."""

    p: int = 5
    n: int = 4
    c: int = 2
    d: int = 2
    s: int = 1
    k: int = 3
    block: int = 2
    hankel: bool = False

    def field(self):
        return QQ if self.p == 0 else PrimeField(self.p)

    def check(self):
        if self.n < 1 or self.n > 16:
            raise ParamOutOfRange("n must be in [1, 16]")
        if self.d < 1 or self.d > 8:
            raise ParamOutOfRange("d must be in [1, 8]")
        if self.c < 1 or self.c > 8:
            raise ParamOutOfRange("c must be in [1, 8]")
        if self.s < 0 or self.s > 6:
            raise ParamOutOfRange("s must be in [0, 6]")
        if self.block < 1 or self.block * self.c > 16:
            raise ParamOutOfRange("block * c must be at most 16")
        if self.k < 2 or self.k > 8:
            raise ParamOutOfRange("k must be in [2, 8]")


def _rng(seed):
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def random_low_strength(ring: Ring, d: int, s: int, rng) -> Polynomial:
    """Sum of s + 1 random products of positive-degree forms (strength <= s); nonzero."""
    if d < 2:
        raise ParamOutOfRange("products need degree >= 2")
    while True:
        f = ring.zero()
        for _ in range(s + 1):
            a = int(rng.integers(1, d))
            f = f + random_homogeneous(ring, a, rng) * random_homogeneous(ring, d - a, rng)
        if f:
            return f


def generate_instance(kind, params: Optional[InstanceParams] = None, seed=0) -> Ideal:
    if isinstance(kind, str):
        kind = InstanceKind.parse(kind)
    params = params or InstanceParams()
    params.check()
    rng = _rng(seed)
    F = params.field()
    if kind is InstanceKind.COMPLETE_INTERSECTION:
        ring = Ring(F, params.c * params.block)
        gens = []
        for i in range(params.c):
            block = Ring(F, params.block)
            g = random_homogeneous(block, params.d, rng)
            images = [ring.var(i * params.block + j) for j in range(params.block)]
            gens.append(g.compose(images))
        return Ideal(ring, gens)
    if kind is InstanceKind.LOW_STRENGTH:
        ring = Ring(F, params.n)
        return Ideal(ring, [random_low_strength(ring, params.d, params.s, rng) for _ in range(params.c)])
    if kind is InstanceKind.DETERMINANTAL:
        if params.hankel:
            ring = Ring(F, params.k + 1, tuple(f"x{i}" for i in range(params.k + 1)))
            x = ring.gens()
            top, bottom = x[: params.k], x[1:]
        else:
            ring = Ring(F, 2 * params.k)
            x = ring.gens()
            top, bottom = x[: params.k], x[params.k :]
        gens = []
        for i in range(params.k):
            for j in range(i + 1, params.k):
                gens.append(top[i] * bottom[j] - top[j] * bottom[i])
        return Ideal(ring, gens)
    if kind is InstanceKind.FERMAT:
        ring = Ring(F, params.n)
        f = ring.zero()
        for v in ring.gens():
            f = f + v ** params.d
        return Ideal(ring, [f])
    raise ParamOutOfRange(f"unhandled kind {kind}")


# --- Jacobian/strength harness ----------------------------------------------


@dataclass
class LemmaParams:
    """One configuration of the harness: f_c..f_r get strength <= s_budget."""

    n: int = 6
    p: int = 5
    r: int = 2
    c: int = 1
    s_budget: int = 1
    dmin: int = 2
    dmax: int = 2

    def check(self):
        if not 1 <= self.c <= self.r:
            raise ParamOutOfRange("need 1 <= c <= r")
        if not 2 <= self.dmin <= self.dmax:
            raise ParamOutOfRange("need 2 <= dmin <= dmax")
        if self.n < 1 or self.s_budget < 0:
            raise ParamOutOfRange("need n >= 1 and s_budget >= 0")
        if self.c > self.n:
            raise ParamOutOfRange("need c <= n for c x c minors")

    @property
    def bound(self) -> int:
        return (self.r - self.c + 1) * (2 * self.s_budget + 2)

    @classmethod
    def parse(cls, text: str) -> "LemmaParams":
        kw = {}
        names = {f for f in cls.__dataclass_fields__}
        aliases = {"s": "s_budget", "q": "p"}
        for item in filter(None, (t.strip() for t in text.split(","))):
            key, _, val = item.partition("=")
            key = aliases.get(key.strip(), key.strip())
            if key not in names:
                raise ParamOutOfRange(f"unknown parameter {key!r}")
            try:
                kw[key] = int(val)
            except ValueError:
                raise ParamOutOfRange(f"parameter {key} needs an integer") from None
        return cls(**kw)

    def to_text(self) -> str:
        return ",".join(f"{k}={v}" for k, v in asdict(self).items())


@dataclass
class LemmaSummary:
    params: LemmaParams
    trials: int = 0
    bound: int = 0
    max_codim: int = 0
    equality_cases: int = 0
    violations: List[dict] = dc_field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "params": asdict(self.params),
            "trials": self.trials,
            "bound": self.bound,
            "max_codim": self.max_codim,
            "equality_cases": self.equality_cases,
            "violation_count": len(self.violations),
            "violations": self.violations,
        }


def lemma_instance(params: LemmaParams, rng) -> Ideal:
    F = QQ if params.p == 0 else PrimeField(params.p)
    ring = Ring(F, params.n)
    gens = []
    for i in range(1, params.r + 1):
        d = int(rng.integers(params.dmin, params.dmax + 1))
        if i >= params.c:
            gens.append(random_low_strength(ring, d, params.s_budget, rng))
        else:
            gens.append(random_homogeneous(ring, d, rng))
    return Ideal(ring, gens)


def check_lemma_strength_jacobian(trials: int, params: Optional[LemmaParams] = None, seed=0) -> LemmaSummary:
    """Check codim J_c(Q) <= (r - c + 1)(2s + 2) on random low-strength instances."""
    params = params or LemmaParams()
    params.check()
    summary = LemmaSummary(params, bound=params.bound)
    root = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    children = root.spawn(trials)
    for t, child in enumerate(children):
        rng = np.random.default_rng(child)
        Q = lemma_instance(params, rng)
        cd = codim(jacobian_minor_ideal(Q, params.c))
        summary.trials += 1
        summary.max_codim = max(summary.max_codim, cd)
        if cd == params.bound:
            summary.equality_cases += 1
        if cd > params.bound:
            summary.violations.append(
                {"trial": t, "codim": cd, "ideal": format_ideal(Q)}
            )
    return summary


def check_lemma_on_ideal(Q: Ideal, c: int, s: int) -> dict:
    """Single-instance form for hand-made examples whose strength is known to be <= s."""
    r = len(Q.generators)
    bound = (r - c + 1) * (2 * s + 2)
    cd = codim(jacobian_minor_ideal(Q, c))
    return {"codim": cd, "bound": bound, "holds": cd <= bound, "equality": cd == bound}


# configurations exercised by the acceptance sweep (n <= 6, F_3/F_5, r <= 3, c <= r, s <= 2)
DEFAULT_SWEEP = [
    LemmaParams(n=6, p=5, r=2, c=1, s_budget=1),
    LemmaParams(n=6, p=3, r=1, c=1, s_budget=1, dmax=3),
    LemmaParams(n=6, p=5, r=1, c=1, s_budget=2, dmax=3),
    LemmaParams(n=5, p=3, r=2, c=2, s_budget=0),
    LemmaParams(n=5, p=5, r=3, c=2, s_budget=1),
    LemmaParams(n=4, p=3, r=3, c=3, s_budget=0),
    LemmaParams(n=6, p=5, r=3, c=1, s_budget=0),
    LemmaParams(n=6, p=3, r=2, c=2, s_budget=2),
]


def lemma_sweep(trials_per_config: int, seed=0, configs=None) -> List[LemmaSummary]:
    configs = DEFAULT_SWEEP if configs is None else configs
    seeds = np.random.SeedSequence(seed).spawn(len(configs))
    return [check_lemma_strength_jacobian(trials_per_config, cfg, s) for cfg, s in zip(configs, seeds)]
