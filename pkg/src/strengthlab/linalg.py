"""Exact sparse linear algebra over a field.

Vectors are dicts ``{key: raw coefficient}`` with sortable keys (we use
monomial tuples, so a polynomial's ``terms`` dict is already a vector).
``SpanReducer`` keeps an echelon basis keyed by pivot = largest key.
"""

from __future__ import annotations

from typing import Dict, Hashable, Iterable, List, Optional, Tuple

from .field import Field

Vector = Dict[Hashable, object]


class SpanReducer:
    """Incremental echelon form; optionally tracks how rows combine inputs."""

    def __init__(self, field: Field, track: bool = False):
        self.field = field
        self.track = track
        self.rows: Dict[Hashable, Tuple[Vector, Optional[Vector]]] = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Vector, combo: Optional[Vector] = None):
        """Return (residual, combo) with vec = residual + sum(combo[label] * input[label])."""
        F = self.field
        work = dict(vec)
        combo = dict(combo) if combo else {}
        out: Vector = {}
        while work:
            k = max(work)
            c = work.pop(k)
            row = self.rows.get(k)
            if row is None:
                out[k] = c
                continue
            rvec, rcombo = row
            F.sub_scaled(work, rvec, c)
            work.pop(k, None)
            if self.track:
                # residual = vec - sum(...), so record the subtraction with opposite sign
                for lab, v in rcombo.items():
                    nv = F.add(combo.get(lab, F.zero), F.mul(c, v))
                    if F.is_zero(nv):
                        combo.pop(lab, None)
                    else:
                        combo[lab] = nv
        return out, combo

    def insert(self, vec: Vector, label: Hashable = None) -> bool:
        """Add vec to the span; return True if it was independent."""
        F = self.field
        res, combo = self.reduce(vec)
        if not res:
            return False
        k = max(res)
        inv = F.inv(res[k])
        res = {m: F.mul(c, inv) for m, c in res.items()}
        if self.track:
            # res = vec - combo_applied  =>  row = inv * (vec - combo_applied)
            rc = {lab: F.mul(F.neg(v), inv) for lab, v in combo.items()}
            key = label
            rc[key] = F.add(rc.get(key, F.zero), inv)
            if F.is_zero(rc[key]):
                del rc[key]
            self.rows[k] = (res, rc)
        else:
            self.rows[k] = (res, None)
        return True

    def contains(self, vec: Vector) -> bool:
        return not self.reduce(vec)[0]

    def solve(self, vec: Vector) -> Optional[Vector]:
        """Coefficients {label: c} with vec = sum c * input[label], or None."""
        if not self.track:
            raise ValueError("solve requires track=True")
        res, combo = self.reduce(vec)
        if res:
            return None
        return combo


def rank(field: Field, vectors: Iterable[Vector]) -> int:
    sr = SpanReducer(field)
    for v in vectors:
        sr.insert(v)
    return sr.rank
