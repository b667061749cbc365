"""The gadget reduction from tables of partial functions to set families.

For a table with rows f_0, f_1, ... the gadget family contains E(n, 0) for
every n and E(n, f_n(m)) wherever f_n is defined at m.  Any two distinct
sets E(n, m), E(n', m') meet exactly in E(min(n, n'), 0), so a sunflower
with core E(r, 0) holds at most one member with n > r; everything else
comes from row r, and the family has an infinite sunflower iff some row has
infinite range.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice

from .cardinality import Cardinality
from .detector import classify
from .errors import PoolTooLarge
from .familyspec import Gadget
from .finitelemma import max_sunflower_exact
from .samesize import DEFAULT_BUDGET
from .setcore import FiniteFamily, FiniteSet, intersect
from .tables import (
    ConstAfter,
    ExplicitRow,
    FnTable,
    Identity,
    Mod,
    RowSpec,
    Undefined,
    eset,
    row_range,
)

__all__ = [
    "ConstAfter", "ExplicitRow", "FnTable", "GadgetReport", "Identity", "Mod",
    "RowSpec", "Undefined", "e_intersection", "eset", "gadget_family",
    "row_range", "truncated_members", "verify_claim",
]

DEFAULT_GADGET_GUARD = 512
WITNESS_PREFIX = 6


def e_intersection(n: int, m: int, n2: int, m2: int) -> FiniteSet:
    return intersect(eset(n, m), eset(n2, m2))


def gadget_family(t: FnTable) -> Gadget:
    return Gadget(t)


def truncated_members(t: FnTable, truncation: int) -> FiniteFamily:
    """Members emitted by stages 0..truncation, in enumeration order."""
    # each stage is exactly two ticks: the backbone set, then the row value
    ticks = Gadget(t).ticks()
    return FiniteFamily(s for s in islice(ticks, 2 * (truncation + 1)) if s is not None)


@dataclass
class GadgetReport:
    truncation: int
    per_row_range: list[Cardinality]
    pool_size: int
    max_sunflower_truncated: int
    bound: int | None                 # max row range + 2, None if some row is infinite
    classification_expected: int
    classification_actual: int | None
    witness_core: FiniteSet | None = None
    witness_prefix: list[FiniteSet] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        if self.classification_expected != self.classification_actual:
            return False
        return self.bound is None or self.max_sunflower_truncated <= self.bound

    def to_json(self) -> dict:
        return {
            "truncation": self.truncation,
            "per_row_range": [c.to_json() for c in self.per_row_range],
            "pool_size": self.pool_size,
            "max_sunflower_truncated": self.max_sunflower_truncated,
            "bound": self.bound,
            "classification_expected": self.classification_expected,
            "classification_actual": self.classification_actual,
            "witness_core": None if self.witness_core is None else str(self.witness_core),
            "witness_prefix": [str(s) for s in self.witness_prefix],
            "holds": self.holds,
        }


def verify_claim(t: FnTable, truncation: int, guard: int = DEFAULT_GADGET_GUARD,
                 budget: int = DEFAULT_BUDGET) -> GadgetReport:
    """Check the finite-range/no-infinite-sunflower correspondence on one table.

    Raises :class:`PoolTooLarge` if the truncated pool exceeds ``guard``.
    """
    pool = truncated_members(t, truncation)
    if len(pool) > guard:
        raise PoolTooLarge(f"{len(pool)} truncated members exceeds the guard of {guard}")
    best = max_sunflower_exact(pool, limit=guard)
    ranges = [row_range(t, n) for n in range(len(t.rows))]
    infinite = any(c.is_infinite for c in ranges)
    bound = None if infinite else max((c.count for c in ranges), default=0) + 2
    result = classify(gadget_family(t), budget)
    report = GadgetReport(
        truncation=truncation,
        per_row_range=ranges,
        pool_size=len(pool),
        max_sunflower_truncated=best.size,
        bound=bound,
        classification_expected=2 if infinite else 1,
        classification_actual=result.code,
    )
    if result.stream is not None:
        report.witness_core = result.stream.core
        report.witness_prefix = result.stream.take(WITNESS_PREFIX)
    return report
