"""Finite sunflower search.

Two searches live here: an exact maximum-sunflower solver (used as the
ground-truth oracle throughout the tests) and the constructive Erdős–Rado
finder, which is guaranteed to find ``t`` petals in any family of more than
``k!(t-1)^k`` sets of size ``k``.

Classical form of the bound: sets of size ``k``, ``t`` petals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from ._packing import best_packing
from .errors import NotUniform, TooLarge
from .setcore import FiniteFamily, FiniteSet

MAX_BOUND = 2**63 - 1
DEFAULT_GUARD = 20


@dataclass(frozen=True)
class SearchResult:
    size: int
    witness: FiniteFamily
    exhaustive: bool


def er_bound(k: int, t: int) -> int:
    """k! * (t - 1)^k."""
    if k < 1 or t < 1:
        raise ValueError("k and t must be positive")
    value = math.factorial(k) * (t - 1) ** k
    if value > MAX_BOUND:
        raise OverflowError(f"er_bound({k}, {t}) exceeds 64-bit range")
    return value


def _as_family(f: Sequence[FiniteSet]) -> FiniteFamily:
    return f if isinstance(f, FiniteFamily) else FiniteFamily(f)


def max_sunflower_exact(f: Sequence[FiniteSet], limit: int = DEFAULT_GUARD) -> SearchResult:
    """Exact maximum sunflower with the lexicographically least witness.

    Witnesses are compared as sorted index tuples in the canonical order of
    ``f``.  Every sunflower with at least two members has a definite core,
    equal to the intersection of any two of its members, so it is enough to
    solve one petal-packing problem per distinct pairwise intersection.
    """
    members = _as_family(f).canonical()
    m = len(members)
    if m > limit:
        raise TooLarge(f"{m} members exceeds the exact-search guard of {limit}")
    if m <= 1:
        return SearchResult(m, members, True)

    cores: dict[frozenset[int], None] = {}
    for i in range(m):
        for j in range(i + 1, m):
            cores.setdefault(members[i].frozen & members[j].frozen)

    best: tuple[int, ...] = (0, 1)
    for r in cores:
        cand = [i for i in range(m) if r <= members[i].frozen]
        if len(cand) < len(best):
            continue
        petals = [members[i].frozen - r for i in cand]
        picked, _ = best_packing(petals, minimum=len(best))
        if not picked:
            continue
        witness = tuple(cand[i] for i in picked)
        if len(witness) > len(best) or witness < best:
            best = witness
    return SearchResult(len(best), FiniteFamily(members[i] for i in best), True)


def maximal_disjoint(f: Sequence[FiniteSet]) -> FiniteFamily:
    """Greedy maximal pairwise-disjoint subfamily, in canonical order."""
    used: set[int] = set()
    out: list[FiniteSet] = []
    for s in _as_family(f).canonical():
        if s.isdisjoint(used):
            out.append(s)
            used |= s.frozen
    return FiniteFamily(out)


def erdos_rado_find(f: Sequence[FiniteSet], t: int) -> SearchResult | None:
    """Find a sunflower with at least ``t`` petals, or ``None``.

    ``None`` is only possible when |f| <= er_bound(k, t).
    """
    if t < 1:
        raise ValueError("t must be positive")
    members = _as_family(f).canonical()
    if len({len(s) for s in members}) > 1:
        raise NotUniform("Erdős–Rado search needs sets of one size")
    found = _er(list(members), t)
    if found is None:
        return None
    return SearchResult(len(found), FiniteFamily(found), False)


def _er(members: list[FiniteSet], t: int) -> list[FiniteSet] | None:
    if not members:
        return None
    disjoint = maximal_disjoint(members)
    if len(disjoint) >= t:
        return list(disjoint)
    support = disjoint.union()
    if not support:
        return None
    # every member meets the support, so some point lies in many members
    x = max(support, key=lambda y: (sum(1 for s in members if y in s), -y))
    link = sorted((s - (x,) for s in members if x in s), key=lambda s: s.key)
    found = _er(link, t)
    if found is None:
        return None
    return [s | (x,) for s in found]
