"""Branch-and-bound maximum set packing over petals.

Given petals ``s - r`` of members containing a fixed core ``r``, a set of
members is a sunflower with core exactly ``r`` iff its petals are pairwise
disjoint.  So both the exact maximum sunflower search and the fixed-core
witness search reduce to maximum set packing.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence


def _clique_bound(petals: Sequence[frozenset[int]], cands: Sequence[int]) -> int:
    """Upper bound on a packing drawn from ``cands``.

    Petals sharing an element are pairwise incompatible, so greedily grouping
    by the most frequent element gives a clique cover; a packing takes at most
    one petal per group, plus at most one empty petal.
    """
    empty = 0
    remaining: list[frozenset[int]] = []
    for i in cands:
        if petals[i]:
            remaining.append(petals[i])
        else:
            empty = 1
    groups = 0
    while remaining:
        freq = Counter(x for p in remaining for x in p)
        x, c = freq.most_common(1)[0]
        if c == 1:
            return groups + len(remaining) + empty
        remaining = [p for p in remaining if x not in p]
        groups += 1
    return groups + empty


class _NodeLimit(Exception):
    pass


def best_packing(
    petals: Sequence[frozenset[int]],
    minimum: int = 0,
    target: int | None = None,
    node_limit: int | None = None,
) -> tuple[list[int], bool]:
    """Lexicographically least maximum packing of size >= ``minimum``.

    Indices are explored in increasing order, including before excluding, so
    the first packing reaching a given size is the lex-least of that size.
    With ``target`` the search stops as soon as a packing of that size is
    found.  Returns ``(indices, complete)``; ``complete`` is False when the
    node limit cut the search short.
    """
    best: list[int] = []
    nodes = 0

    def threshold() -> int:
        return len(best) + 1 if best else max(minimum, 1)

    def dfs(chosen: list[int], cands: list[int]) -> bool:
        nonlocal best, nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise _NodeLimit
        if len(chosen) >= max(minimum, 1) and len(chosen) > len(best):
            best = list(chosen)
            if target is not None and len(best) >= target:
                return True
        for pos, i in enumerate(cands):
            need = threshold() if target is None else max(threshold(), target)
            if len(chosen) + len(cands) - pos < need:
                return False
            if len(chosen) + _clique_bound(petals, cands[pos:]) < need:
                return False
            p = petals[i]
            rest = [j for j in cands[pos + 1:] if p.isdisjoint(petals[j])]
            if dfs(chosen + [i], rest):
                return True
        return False

    try:
        dfs([], list(range(len(petals))))
    except _NodeLimit:
        return best, False
    return best, True
