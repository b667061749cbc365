"""Classifying families by whether they contain an infinite sunflower.

Codes: 0 = not an infinite family, 1 = infinite but no infinite sunflower,
2 = infinite sunflower (with a live witness stream), ``None`` = unknown.

Detection and extraction use the fixed-core characterization: f contains an
infinite sunflower iff for some finite r, f contains sunflowers with core
exactly r of every finite size.  Given such an r, the greedy diagonal builds
an infinite one: keep the union U of petals emitted so far, ask for an
exact-core-r sunflower with |U| + 2 members, and emit one of its members
whose petal avoids U.  Petals of one sunflower are pairwise disjoint, so at
most |U| of them meet U, and at most one further member (r itself) can have
been emitted already.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator

from ._packing import best_packing
from .cardinality import GroundTruth
from .errors import BudgetExhausted, SunflowerError, UncertifiedCore
from .familyspec import (
    FamilySpec,
    Gadget,
    Link,
    Matching,
    Pad,
    Slice,
    Star,
    Strip,
    Union,
    gadget_row_ticks,
    ground_truth_sunflower,
    member_count,
    size_class_count,
)
from .samesize import DEFAULT_BUDGET, SunflowerStream, plan_extraction, plan_ticks
from .setcore import EMPTY, FiniteFamily, FiniteSet
from .tables import eset

# DFS nodes allowed for one exact packing attempt inside a budgeted search
PACKING_NODE_LIMIT = 50_000
REPORT_PREFIX = 16

LABELS = {
    0: "finite family",
    1: "infinite family, no infinite sunflower",
    2: "infinite sunflower",
    None: "unknown",
}


@dataclass(frozen=True)
class Certificate:
    """Structural evidence of exact-core-``core`` sunflowers of every size.

    ``pool`` yields candidate members (as ticks); when ``exact`` is set the
    pool itself is already a sunflower with this core, in order.
    """

    core: FiniteSet
    pool: Callable[[], Iterator[FiniteSet | None]]
    exact: bool
    source: str


def _strip_ticks(ticks: Iterator[FiniteSet | None], a: int) -> Iterator[FiniteSet | None]:
    for s in ticks:
        yield s - (a,) if s is not None and a in s and len(s) > 1 else None


def _uniform_certificate(f: FamilySpec, budget: int) -> Certificate | None:
    try:
        plan = plan_extraction(f, budget)
    except SunflowerError:
        return None
    return Certificate(plan.pinned_set, lambda: plan_ticks(plan), True, "uniform")


def certified_cores(f: FamilySpec, budget: int = DEFAULT_BUDGET) -> list[Certificate]:
    """Cores r for which ``f`` certifiably has exact-core-r sunflowers of every size."""
    certs: list[Certificate] = []
    match f:
        case Matching():
            certs.append(Certificate(EMPTY, f.ticks, True, "matching"))
        case Star(c=c):
            certs.append(Certificate(c, f.ticks, True, "star"))
        case Gadget(table=t):
            for n in t.infinite_rows():
                certs.append(Certificate(eset(n, 0), lambda n=n: gadget_row_ticks(t, n), True, f"gadget row {n}"))
        case Union(left=left, right=right):
            certs = certified_cores(left, budget) + certified_cores(right, budget)
        case Link(a=a, inner=inner):
            certs = [c for c in certified_cores(inner, budget) if a in c.core]
        case Strip(a=a, inner=inner):
            certs = [
                Certificate(c.core - (a,), lambda c=c: _strip_ticks(c.pool(), a), c.exact, c.source)
                for c in certified_cores(inner, budget) if a in c.core
            ]
        case Pad(inner=inner):
            certs = [
                Certificate(FiniteSet(2 * x for x in c.core), f.ticks, False, f"padded {c.source}")
                for c in certified_cores(inner, budget)
            ]
    if certs:
        return certs
    cert = _uniform_certificate(f, budget)
    if cert is not None:
        return [cert]
    lo, hi = f.size_bounds()
    if hi is not None and not isinstance(f, Slice):
        for size in range(max(lo, 1), hi + 1):
            if size_class_count(f, size).is_infinite:
                cert = _uniform_certificate(Slice(size, f), budget)
                if cert is not None:
                    return [cert]
    return []


def candidate_cores(f: FamilySpec, k: int, budget: int = DEFAULT_BUDGET) -> list[FiniteSet]:
    """Distinct pairwise intersections among the first ``k`` members, first occurrence first."""
    members: list[FiniteSet] = []
    cores: dict[FiniteSet, None] = {}
    for examined, s in enumerate(f.ticks()):
        if len(members) == k or examined >= budget:
            break
        if s is None:
            continue
        for p in members:
            cores.setdefault(p & s)
        members.append(s)
    return list(cores)


@dataclass(frozen=True)
class Exhausted:
    """No witness found within budget; ``best`` is the largest found."""

    best: FiniteFamily
    examined: int

    def __bool__(self) -> bool:
        return False


def _search_exact_core(ticks: Iterator[FiniteSet | None], r: FiniteSet, t: int,
                       budget: int) -> FiniteFamily | Exhausted:
    core = r.frozen
    pool: list[FiniteSet] = []
    petals: list[frozenset[int]] = []
    greedy: list[FiniteSet] = []
    greedy_used: set[int] = set()
    best: list[FiniteSet] = []
    next_check = 8
    examined = 0

    def pack() -> list[FiniteSet]:
        picked, _ = best_packing(petals, minimum=len(best) + 1 if best else 1,
                                 target=t, node_limit=PACKING_NODE_LIMIT)
        return [pool[i] for i in picked]

    for s in ticks:
        if examined >= budget:
            break
        examined += 1
        if s is None or not core <= s.frozen:
            continue
        petal = s.frozen - core
        pool.append(s)
        petals.append(petal)
        if greedy_used.isdisjoint(petal):
            greedy.append(s)
            greedy_used |= petal
            if len(greedy) >= t:
                return FiniteFamily(greedy)
        if len(greedy) > len(best):
            best = list(greedy)
        if len(pool) >= next_check:
            next_check *= 2
            found = pack()
            if len(found) > len(best):
                best = found
            if len(best) >= t:
                return FiniteFamily(best)
    found = pack()
    if len(found) > len(best):
        best = found
    if len(best) >= t:
        return FiniteFamily(best)
    return Exhausted(FiniteFamily(best), examined)


def find_exact_core_sunflower(f: FamilySpec, r: FiniteSet, t: int,
                              budget: int = DEFAULT_BUDGET) -> FiniteFamily | Exhausted:
    """At least ``t`` members of ``f`` whose pairwise intersections are exactly ``r``.

    Greedy first fit over the enumeration, with exact packing attempts on the
    accumulated candidates at doubling checkpoints.  :class:`Exhausted` only
    means nothing was found within budget.
    """
    return _search_exact_core(f.ticks(), r, t, budget)


class _Diagonal:
    def __init__(self, cert: Certificate) -> None:
        self.cert = cert
        self.used: set[int] = set()
        self.emitted: set[FiniteSet] = set()

    def __call__(self, budget: int) -> FiniteSet:
        r = self.cert.core
        t = len(self.used) + 2
        found = _search_exact_core(self.cert.pool(), r, t, budget)
        if isinstance(found, Exhausted):
            raise BudgetExhausted(
                f"no exact-core sunflower of size {t} within {budget} candidates"
            )
        for s in found:
            petal = s.frozen - r.frozen
            if petal.isdisjoint(self.used) and s not in self.emitted:
                self.used |= petal
                self.emitted.add(s)
                return s
        raise AssertionError("pigeonhole violated: exact-core witness too small")


def extract_sunflower(f: FamilySpec, r: FiniteSet, budget: int = DEFAULT_BUDGET) -> SunflowerStream:
    for cert in certified_cores(f, budget):
        if cert.core == r:
            break
    else:
        raise UncertifiedCore(f"{f} does not certify unbounded sunflowers with core {r}")
    if cert.exact:
        return SunflowerStream.from_ticks(r, cert.pool(), budget)
    return SunflowerStream(r, _Diagonal(cert), budget)


@dataclass
class Classification:
    code: int | None
    stream: SunflowerStream | None = None
    report: dict = field(default_factory=dict)

    @property
    def label(self) -> str:
        return LABELS[self.code]

    @property
    def is_witness(self) -> bool:
        return self.code == 2


def _core_report(f: FamilySpec, budget: int) -> dict:
    """Largest exact-core sunflower per candidate core, over a prefix of f."""
    members: list[FiniteSet] = []
    for examined, s in enumerate(f.ticks()):
        if len(members) == REPORT_PREFIX or examined >= budget:
            break
        if s is not None:
            members.append(s)
    out = {}
    for r in candidate_cores(f, REPORT_PREFIX, budget):
        cand = [s for s in members if r <= s]
        picked, _ = best_packing([s.frozen - r.frozen for s in cand], node_limit=PACKING_NODE_LIMIT)
        out[str(r)] = len(picked)
    return {"prefix": len(members), "largest_exact_core": out}


def classify(f: FamilySpec, budget: int = DEFAULT_BUDGET) -> Classification:
    count = member_count(f)
    if count.is_finite:
        return Classification(0, report={"members": count.count})
    truth = ground_truth_sunflower(f)
    if truth is GroundTruth.NO:
        if count.is_infinite:
            return Classification(1)
        return Classification(None, report=_core_report(f, budget))
    certs = certified_cores(f, budget)
    if certs:
        stream = extract_sunflower(f, certs[0].core, budget)
        return Classification(2, stream, {"core": str(certs[0].core), "source": certs[0].source})
    return Classification(None, report=_core_report(f, budget))
