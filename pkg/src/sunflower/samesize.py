"""Infinite sunflowers in infinite families of n-element sets.

The extractor follows the classic induction on n:

* if some point a lies in infinitely many members, pin it and recurse on
  {s - {a} : a in s in f} (sets of size n - 1);
* otherwise every point has finite degree, and greedily choosing members
  that avoid everything chosen so far never gets stuck;
* size 1 is the base case: distinct singletons already form a sunflower.

Pinned points are put back when emitting, so the stream holds actual members
of the input and its core is exactly the pinned set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .errors import (
    BudgetExhausted,
    NotInfinite,
    NotUniform,
    OracleIncomplete,
    Uncertified,
)
from .familyspec import (
    ORACLE_BUDGET,
    FamilySpec,
    Link,
    Strip,
    _collect,
    enumerate_family,
    member_count,
    point_degree,
    size_class_count,
)
from .setcore import FiniteFamily, FiniteSet

DEFAULT_BUDGET = 100_000
BASE1 = "base1"
DISJOINT = "disjoint"


class SunflowerStream:
    """A lazy sunflower: a fixed core and members produced on demand.

    ``next_member(budget)`` raises :class:`BudgetExhausted` if it examines
    ``budget`` candidates without producing a member; the stream keeps its
    position, so calling again simply continues the search.
    """

    def __init__(self, core: FiniteSet, step: Callable[[int], FiniteSet],
                 budget: int = DEFAULT_BUDGET) -> None:
        self.core = core
        self.budget = budget
        self.emitted: list[FiniteSet] = []
        self._step = step

    @classmethod
    def from_ticks(cls, core: FiniteSet, ticks: Iterator[FiniteSet | None],
                   budget: int = DEFAULT_BUDGET) -> SunflowerStream:
        def step(limit: int) -> FiniteSet:
            for _ in range(limit):
                s = next(ticks)
                if s is not None:
                    return s
            raise BudgetExhausted(f"no new member within {limit} candidates")
        return cls(core, step, budget)

    def next_member(self, budget: int | None = None) -> FiniteSet:
        s = self._step(self.budget if budget is None else budget)
        self.emitted.append(s)
        return s

    def __iter__(self) -> SunflowerStream:
        return self

    def __next__(self) -> FiniteSet:
        return self.next_member()

    def take(self, m: int) -> list[FiniteSet]:
        """The next ``m`` members (fewer only if the stream is finite)."""
        out = []
        for _ in range(m):
            try:
                out.append(self.next_member())
            except StopIteration:
                break
        return out

    @property
    def count(self) -> int:
        return len(self.emitted)


@dataclass(frozen=True)
class ExtractionPlan:
    n: int
    pinned: tuple[int, ...]      # in the order they were chosen
    residual: FamilySpec
    terminal: str                # BASE1 or DISJOINT

    @property
    def pinned_set(self) -> FiniteSet:
        return FiniteSet(self.pinned)


def check_uniform(f: FamilySpec, budget: int = 1_000) -> int:
    """Certify that every member of ``f`` has one size n and f is infinite; return n."""
    lo, hi = f.size_bounds()
    if hi is not None and lo == hi:
        n = lo
    elif hi is not None:
        nonempty = []
        for size in range(max(lo, 1), hi + 1):
            c = size_class_count(f, size)
            if c.is_unknown:
                raise Uncertified(f"size class {size} of {f} is not certifiable")
            if not (c.is_finite and c.count == 0):
                nonempty.append(size)
        if len(nonempty) > 1:
            raise NotUniform(f"{f} has members of sizes {nonempty[0]} and {nonempty[1]}")
        if not nonempty:
            raise NotInfinite(f"{f} has no members")
        n = nonempty[0]
    else:
        prefix, _ = enumerate_family(f, 64, max(budget, 64))
        sizes = sorted({len(s) for s in prefix})
        if len(sizes) > 1:
            raise NotUniform(f"{f} has members of sizes {sizes[0]} and {sizes[1]}")
        raise Uncertified(f"cannot certify that all members of {f} have one size")
    c = member_count(f)
    if c.is_unknown:
        raise Uncertified(f"cannot certify that {f} is infinite")
    if c.is_finite:
        raise NotInfinite(f"{f} has only {c.count} members")
    return n


def _infinite_point(f: FamilySpec, budget: int) -> int:
    """First point of infinite degree, scanning members in order, each ascending."""
    flag = f.degrees_finite()
    checked: set[int] = set()
    limit = budget if flag is False else min(budget, 256)
    for examined, s in enumerate(f.ticks()):
        if examined >= limit:
            break
        if s is None:
            continue
        for a in s:
            if a in checked:
                continue
            checked.add(a)
            d = point_degree(f, a)
            if d.is_infinite:
                return a
            if d.is_unknown:
                raise OracleIncomplete(f"degree of {a} in {f} is not certifiable")
    if flag is False:
        raise BudgetExhausted(f"no point of infinite degree found within {limit} candidates")
    raise OracleIncomplete(f"cannot certify which case applies to {f}")


def plan_extraction(f: FamilySpec, budget: int = DEFAULT_BUDGET) -> ExtractionPlan:
    n = check_uniform(f)
    pins: list[int] = []
    cur = f
    size = n
    while size > 1:
        if cur.degrees_finite() is True:
            return ExtractionPlan(n, tuple(pins), cur, DISJOINT)
        a = _infinite_point(cur, budget)
        pins.append(a)
        cur = Strip(a, Link(a, cur))
        size -= 1
    return ExtractionPlan(n, tuple(pins), cur, BASE1)


def interfering_sets(f: FamilySpec, q0: FiniteFamily, budget: int = ORACLE_BUDGET) -> FiniteFamily:
    """All members of ``f`` meeting the union of ``q0``.

    Requires every point of that union to have finite degree.
    """
    found: set[FiniteSet] = set()
    for a in q0.union():
        d = point_degree(f, a)
        if not d.is_finite:
            raise OracleIncomplete(f"degree of {a} is {d}, need a finite count")
        link = _collect(f, frozenset({a}), None, d.count, budget)
        if link is None or len(link) < d.count:
            raise BudgetExhausted(f"could not list the {d.count} members containing {a}")
        found |= link
    return FiniteFamily(sorted(found, key=lambda s: s.key))


def _disjoint_ticks(residual: FamilySpec, pins: frozenset[int]) -> Iterator[FiniteSet | None]:
    # first member avoiding everything chosen so far == first member outside
    # the interfering sets of the chosen prefix
    used: set[int] = set()
    for s in residual.ticks():
        if s is None or not s.isdisjoint(used):
            yield None
        else:
            used |= s.frozen
            yield s | pins


def plan_ticks(plan: ExtractionPlan) -> Iterator[FiniteSet | None]:
    pins = frozenset(plan.pinned)
    if plan.terminal == BASE1:
        return (None if s is None else s | pins for s in plan.residual.ticks())
    return _disjoint_ticks(plan.residual, pins)


def extract_uniform_sunflower(f: FamilySpec, budget: int = DEFAULT_BUDGET) -> SunflowerStream:
    plan = plan_extraction(f, budget)
    return SunflowerStream.from_ticks(plan.pinned_set, plan_ticks(plan), budget)


def extract_truncated(members: FiniteFamily, count: int) -> tuple[FiniteSet, FiniteFamily]:
    """Best-effort extraction on an explicit truncation.

    The same induction, with "infinite degree" replaced by "lies in at least
    ``count`` of the remaining sets".  The result is a genuine sunflower
    drawn from ``members`` but may have fewer than ``count`` members.
    """
    sizes = {len(s) for s in members}
    if len(sizes) > 1:
        raise NotUniform(f"truncation has members of sizes {sorted(sizes)[:2]}")
    pins: list[int] = []
    cur = [s.frozen for s in members]
    size = sizes.pop() if sizes else 0
    while size > 1:
        degree: dict[int, int] = {}
        for s in cur:
            for a in s:
                degree[a] = degree.get(a, 0) + 1
        heavy = [a for s in cur for a in sorted(s) if degree[a] >= count]
        if not heavy:
            break
        a = heavy[0]
        pins.append(a)
        cur = [s - {a} for s in cur if a in s]
        size -= 1
    core = frozenset(pins)
    out: list[FiniteSet] = []
    used: set[int] = set()
    for s in cur:
        if len(out) == count:
            break
        if s.isdisjoint(used):
            used |= s
            out.append(FiniteSet(s | core))
    return FiniteSet(core), FiniteFamily(out)
