from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


@dataclass(frozen=True)
class Cardinality:
    """Finite(count), Infinite, or Unknown.

    Addition follows disjoint union: Infinite absorbs everything except that
    Unknown + Infinite is still Infinite; Unknown + Finite is Unknown.
    """

    kind: str
    count: int | None = None

    @classmethod
    def finite(cls, count: int) -> Cardinality:
        if count < 0:
            raise ValueError("negative count")
        return cls("finite", count)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinite"

    @property
    def is_unknown(self) -> bool:
        return self.kind == "unknown"

    def __add__(self, other: Cardinality) -> Cardinality:
        if self.is_infinite or other.is_infinite:
            return INFINITE
        if self.is_unknown or other.is_unknown:
            return UNKNOWN
        return Cardinality.finite(self.count + other.count)

    def __str__(self) -> str:
        if self.is_finite:
            return f"Finite({self.count})"
        return "Infinite" if self.is_infinite else "Unknown"

    def to_json(self):
        return self.count if self.is_finite else self.kind


INFINITE = Cardinality("infinite")
UNKNOWN = Cardinality("unknown")
FINITE_ZERO = Cardinality.finite(0)


class GroundTruth(Enum):
    """Whether a family contains an infinite sunflower."""

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"
