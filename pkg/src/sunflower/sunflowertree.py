"""The n-th sunflower tree.

Level k of the tree T_n(f) holds every finite nonempty sunflower inside f
whose smallest member has at most n elements and whose largest has at most
n + k.  The parent of a level-(k+1) node is its restriction to members of
size <= n + k, so a node may be its own child (the "stagnant" child).

"The tree is infinite" can mean two different things here and they are
reported separately: the number of distinct nodes can grow without bound
while every strictly increasing chain of nodes stays short.  The graded
blocks family shows this: node counts keep growing with depth, yet it has no
infinite sunflower.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .errors import (
    BudgetExhausted,
    OracleIncomplete,
    PoolInfinite,
    PoolTooLarge,
)
from .familyspec import FamilySpec, size_class_count
from .setcore import FiniteFamily, FiniteSet, is_sunflower

DEFAULT_TREE_GUARD = 24
DEFAULT_BUDGET = 100_000


@dataclass(frozen=True)
class TreeLevel:
    n: int
    k: int
    nodes: tuple[FiniteFamily, ...]

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass
class TreeStats:
    n: int
    depth: int
    per_level_counts: list[int] = field(default_factory=list)
    cumulative_distinct: list[int] = field(default_factory=list)
    longest_strict_chain: int = 0
    chain_witness: list[FiniteFamily] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "depth": self.depth,
            "per_level_counts": self.per_level_counts,
            "cumulative_distinct": self.cumulative_distinct,
            "longest_strict_chain": self.longest_strict_chain,
            "chain_witness": [[str(s) for s in node] for node in self.chain_witness],
        }


def tree_pool(f: FamilySpec, max_size: int, budget: int = DEFAULT_BUDGET,
              guard: int = DEFAULT_TREE_GUARD) -> list[FiniteSet]:
    """All members of size <= ``max_size``, canonically ordered."""
    total = 0
    for size in range(1, max_size + 1):
        c = size_class_count(f, size)
        if c.is_infinite:
            raise PoolInfinite(f"{f} has infinitely many members of size {size}")
        if c.is_unknown:
            raise OracleIncomplete(f"size class {size} of {f} is not certifiable")
        total += c.count
    if total > guard:
        raise PoolTooLarge(f"{total} members of size <= {max_size} exceeds the guard of {guard}")
    pool: list[FiniteSet] = []
    if total:
        for examined, s in enumerate(f.ticks(), start=1):
            if s is not None and len(s) <= max_size:
                pool.append(s)
                if len(pool) == total:
                    break
            if examined >= budget:
                raise BudgetExhausted(f"found {len(pool)} of {total} pool members within {budget} candidates")
    return sorted(pool, key=lambda s: s.key)


def _extensions(pool: Sequence[FiniteSet], chosen: list[int], start: int) -> Iterator[list[int]]:
    """``chosen`` and every sunflower extending it by pool indices >= ``start``."""
    if len(chosen) >= 2:
        core = pool[chosen[0]].frozen & pool[chosen[1]].frozen
        used: set[int] = set()
        for i in chosen:
            used |= pool[i].frozen - core
    else:
        core, used = None, set()

    def grow(chosen: list[int], core, used: set[int], start: int) -> Iterator[list[int]]:
        yield chosen
        for j in range(start, len(pool)):
            s = pool[j].frozen
            if core is None:
                first = pool[chosen[0]].frozen
                c = first & s
                yield from grow(chosen + [j], c, set((first - c) | (s - c)), j + 1)
            elif core <= s and used.isdisjoint(s - core):
                yield from grow(chosen + [j], core, used | (s - core), j + 1)

    yield from grow(chosen, core, used, start)


def _level_nodes(pool: list[FiniteSet], n: int) -> list[list[int]]:
    # canonical order puts a node's smallest member first, so a node qualifies
    # iff its first index is a member of size <= n
    nodes: list[list[int]] = []
    for i, s in enumerate(pool):
        if len(s) > n:
            break
        nodes.extend(_extensions(pool, [i], i + 1))
    nodes.sort(key=lambda idx: (len(idx), idx))
    return nodes


def tree_level(f: FamilySpec, n: int, k: int, budget: int = DEFAULT_BUDGET,
               guard: int = DEFAULT_TREE_GUARD) -> TreeLevel:
    pool = tree_pool(f, n + k, budget, guard)
    nodes = _level_nodes(pool, n)
    return TreeLevel(n, k, tuple(FiniteFamily(pool[i] for i in idx) for idx in nodes))


def children(f: FamilySpec, n: int, k: int, node: FiniteFamily, budget: int = DEFAULT_BUDGET,
             guard: int = DEFAULT_TREE_GUARD) -> list[FiniteFamily]:
    """Level-(k+1) nodes whose restriction to sizes <= n + k is ``node``."""
    node = node.canonical()
    if not node or not is_sunflower(node) or len(node[0]) > n or len(node[-1]) > n + k:
        raise ValueError(f"{node} is not a node of level {k}")
    pool = tree_pool(f, n + k + 1, budget, guard)
    position = {s: i for i, s in enumerate(pool)}
    if any(s not in position for s in node):
        raise ValueError(f"{node} is not contained in the family")
    # new members all have size n+k+1, so they sort after every node member
    fresh = next((i for i, s in enumerate(pool) if len(s) == n + k + 1), len(pool))
    base = [position[s] for s in node]
    out = [FiniteFamily(pool[i] for i in idx) for idx in _extensions(pool, base, fresh)]
    out.sort(key=lambda fam: (len(fam), [position[s] for s in fam]))
    return out


def tree_stats(f: FamilySpec, n: int, depth: int, budget: int = DEFAULT_BUDGET,
               guard: int = DEFAULT_TREE_GUARD) -> TreeStats:
    stats = TreeStats(n, depth)
    seen: set[FiniteFamily] = set()
    last: TreeLevel | None = None
    for k in range(depth + 1):
        level = tree_level(f, n, k, budget, guard)
        stats.per_level_counts.append(len(level))
        seen.update(level.nodes)
        stats.cumulative_distinct.append(len(seen))
        last = level
    if last is not None and last.nodes:
        # every prefix of a node that keeps its smallest member is again a node
        widest = max(last.nodes, key=len)  # first of the largest, in canonical order
        stats.longest_strict_chain = len(widest)
        stats.chain_witness = [widest[: i + 1] for i in range(len(widest))]
    return stats
