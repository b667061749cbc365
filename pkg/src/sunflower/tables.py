"""Tables of partial functions on the naturals and the gadget sets E(n, m).

Row ``n`` of a table plays the role of the partial function
``m -> f_n(m)``.  Rows are drawn from a small vocabulary whose range
cardinality is decidable, which is what lets the gadget family answer
cardinality questions exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .cardinality import Cardinality, INFINITE
from .errors import NonPositiveParameter
from .pairing import pair
from .setcore import FiniteSet


class RowSpec:
    def value(self, m: int) -> int | None:
        raise NotImplementedError

    def in_range(self, v: int) -> bool:
        raise NotImplementedError

    def range_values(self) -> frozenset[int] | None:
        """The range when finite, else ``None``."""
        raise NotImplementedError

    def range_card(self) -> Cardinality:
        values = self.range_values()
        return INFINITE if values is None else Cardinality.finite(len(values))

    def nonzero_range_card(self) -> Cardinality:
        values = self.range_values()
        return INFINITE if values is None else Cardinality.finite(len(values - {0}))


@dataclass(frozen=True)
class Identity(RowSpec):
    def value(self, m: int) -> int | None:
        return m

    def in_range(self, v: int) -> bool:
        return True

    def range_values(self) -> frozenset[int] | None:
        return None

    def __str__(self) -> str:
        return "identity"


@dataclass(frozen=True)
class Mod(RowSpec):
    p: int

    def __post_init__(self) -> None:
        if self.p < 1:
            raise NonPositiveParameter(f"mod needs a positive modulus, got {self.p}")

    def value(self, m: int) -> int | None:
        return m % self.p

    def in_range(self, v: int) -> bool:
        return v < self.p

    def range_values(self) -> frozenset[int] | None:
        return frozenset(range(self.p))

    def __str__(self) -> str:
        return f"mod {self.p}"


@dataclass(frozen=True)
class ConstAfter(RowSpec):
    """m for m < k, then the constant v."""

    k: int
    v: int

    def value(self, m: int) -> int | None:
        return m if m < self.k else self.v

    def in_range(self, v: int) -> bool:
        return v < self.k or v == self.v

    def range_values(self) -> frozenset[int] | None:
        return frozenset(range(self.k)) | {self.v}

    def __str__(self) -> str:
        return f"const_after {self.k} {self.v}"


@dataclass(frozen=True)
class ExplicitRow(RowSpec):
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        ms = [m for m, _ in self.pairs]
        if len(set(ms)) != len(ms):
            raise ValueError("explicit row defines some argument twice")

    def value(self, m: int) -> int | None:
        for a, v in self.pairs:
            if a == m:
                return v
        return None

    def in_range(self, v: int) -> bool:
        return any(w == v for _, w in self.pairs)

    def range_values(self) -> frozenset[int] | None:
        return frozenset(v for _, v in self.pairs)

    def __str__(self) -> str:
        return "explicit[" + ",".join(f"({m},{v})" for m, v in self.pairs) + "]"


@dataclass(frozen=True)
class Undefined(RowSpec):
    def value(self, m: int) -> int | None:
        return None

    def in_range(self, v: int) -> bool:
        return False

    def range_values(self) -> frozenset[int] | None:
        return frozenset()

    def __str__(self) -> str:
        return "undefined"


UNDEFINED = Undefined()


@dataclass(frozen=True)
class FnTable:
    """Finitely many rows; every row past the end is undefined everywhere."""

    rows: tuple[RowSpec, ...] = ()

    @classmethod
    def of(cls, rows: Iterable[RowSpec]) -> FnTable:
        return cls(tuple(rows))

    def row(self, n: int) -> RowSpec:
        return self.rows[n] if n < len(self.rows) else UNDEFINED

    def value(self, n: int, m: int) -> int | None:
        return self.row(n).value(m)

    def infinite_rows(self) -> list[int]:
        return [n for n, r in enumerate(self.rows) if r.range_values() is None]

    def __str__(self) -> str:
        return ";".join(map(str, self.rows))


def backbone(n: int) -> frozenset[int]:
    return frozenset(pair(0, i) for i in range(n + 1))


def eset(n: int, m: int) -> FiniteSet:
    """E(n, m) = {(0,0), ..., (0,n)} u {(m,n)}, pair-coded."""
    return FiniteSet(backbone(n) | {pair(m, n)})


def row_range(t: FnTable, n: int) -> Cardinality:
    return t.row(n).range_card()

