"""Finite sets of naturals, finite families, and sunflower verification."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, overload

from .errors import NotASunflower, SpecSyntaxError


class FiniteSet:
    """An immutable finite set of natural numbers, kept in ascending order."""

    __slots__ = ("_elements", "_frozen")

    def __init__(self, elements: Iterable[int] = ()) -> None:
        frozen = frozenset(elements)
        for x in frozen:
            if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                raise ValueError(f"elements must be natural numbers, got {x!r}")
        self._frozen = frozen
        self._elements = tuple(sorted(frozen))

    @property
    def elements(self) -> tuple[int, ...]:
        return self._elements

    @property
    def frozen(self) -> frozenset[int]:
        return self._frozen

    def size(self) -> int:
        return len(self._elements)

    @property
    def key(self) -> tuple[int, tuple[int, ...]]:
        """Canonical sort key: by size, then elements."""
        return len(self._elements), self._elements

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self._elements)

    def __contains__(self, x: object) -> bool:
        return x in self._frozen

    def __hash__(self) -> int:
        return hash(self._frozen)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FiniteSet):
            return self._frozen == other._frozen
        return NotImplemented

    def __lt__(self, other: FiniteSet) -> bool:
        return self.key < other.key

    def __le__(self, other: FiniteSet) -> bool:
        return self._frozen <= other._frozen

    def issubset(self, other: FiniteSet) -> bool:
        return self._frozen <= other._frozen

    def isdisjoint(self, other: Iterable[int]) -> bool:
        return self._frozen.isdisjoint(other)

    def __and__(self, other: FiniteSet) -> FiniteSet:
        return FiniteSet(self._frozen & other._frozen)

    def __or__(self, other: FiniteSet | Iterable[int]) -> FiniteSet:
        if isinstance(other, FiniteSet):
            other = other._frozen
        return FiniteSet(self._frozen.union(other))

    def __sub__(self, other: FiniteSet | Iterable[int]) -> FiniteSet:
        if isinstance(other, FiniteSet):
            other = other._frozen
        return FiniteSet(self._frozen.difference(other))

    def max(self, default: int = -1) -> int:
        return self._elements[-1] if self._elements else default

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self._elements)) + "}"

    def __repr__(self) -> str:
        return f"FiniteSet({self})"


EMPTY = FiniteSet()


def fset(*elements: int) -> FiniteSet:
    return FiniteSet(elements)


def initial_segment(n: int) -> FiniteSet:
    """[n] = {0, ..., n-1}."""
    return FiniteSet(range(n))


class FiniteFamily(Sequence[FiniteSet]):
    """A duplicate-free, ordered collection of finite sets."""

    __slots__ = ("_members", "_index")

    def __init__(self, members: Iterable[FiniteSet | Iterable[int]] = ()) -> None:
        out: list[FiniteSet] = []
        index: dict[FiniteSet, int] = {}
        for m in members:
            s = m if isinstance(m, FiniteSet) else FiniteSet(m)
            if s in index:
                raise ValueError(f"duplicate member {s} in family")
            index[s] = len(out)
            out.append(s)
        self._members = tuple(out)
        self._index = index

    @classmethod
    def dedup(cls, members: Iterable[FiniteSet | Iterable[int]]) -> FiniteFamily:
        """Build a family keeping only first occurrences."""
        seen: dict[FiniteSet, None] = {}
        for m in members:
            seen.setdefault(m if isinstance(m, FiniteSet) else FiniteSet(m))
        return cls(seen)

    @property
    def members(self) -> tuple[FiniteSet, ...]:
        return self._members

    @overload
    def __getitem__(self, i: int) -> FiniteSet: ...
    @overload
    def __getitem__(self, i: slice) -> FiniteFamily: ...

    def __getitem__(self, i):
        if isinstance(i, slice):
            return FiniteFamily(self._members[i])
        return self._members[i]

    def __len__(self) -> int:
        return len(self._members)

    def __contains__(self, s: object) -> bool:
        return s in self._index

    def index(self, s: FiniteSet, *args) -> int:  # type: ignore[override]
        return self._index[s]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FiniteFamily):
            return self._members == other._members
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._members)

    def same_members(self, other: FiniteFamily) -> bool:
        return set(self._members) == set(other._members)

    def canonical(self) -> FiniteFamily:
        return FiniteFamily(sorted(self._members, key=lambda s: s.key))

    def union(self) -> FiniteSet:
        out: set[int] = set()
        for s in self._members:
            out |= s.frozen
        return FiniteSet(out)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self._members)) + "]"

    def __repr__(self) -> str:
        return f"FiniteFamily({self})"


@dataclass(frozen=True)
class SunflowerCheck:
    verdict: bool
    core: FiniteSet | None = None
    # two member-index pairs whose intersections differ
    violation: tuple[tuple[int, int], tuple[int, int]] | None = None

    def __bool__(self) -> bool:
        return self.verdict


def intersect(p: FiniteSet, q: FiniteSet) -> FiniteSet:
    return p & q


def is_sunflower(f: Sequence[FiniteSet]) -> SunflowerCheck:
    """Check that all pairwise intersections of distinct members agree.

    Runs in time linear in the total size of ``f``: with ``r`` the
    intersection of the first two members, the family is a sunflower iff
    every member contains ``r`` and the petals ``s - r`` are pairwise
    disjoint.  A failure is reported as two index pairs whose intersections
    differ.
    """
    members = list(f)
    if len(members) <= 1:
        return SunflowerCheck(True)
    core = members[0].frozen & members[1].frozen
    owner: dict[int, int] = {}
    for j, s in enumerate(members):
        if not core <= s.frozen:
            # some x in core is missing from s, so members[0] & s != core
            return SunflowerCheck(False, violation=((0, 1), (0, j)))
        for x in s.frozen - core:
            i = owner.get(x)
            if i is not None:
                return SunflowerCheck(False, violation=((0, 1), (i, j)))
            owner[x] = j
    return SunflowerCheck(True, core=FiniteSet(core))


def core_of(f: Sequence[FiniteSet]) -> FiniteSet | None:
    """The common intersection of a sunflower; ``None`` when |f| <= 1."""
    check = is_sunflower(f)
    if not check.verdict:
        (a, b), (c, d) = check.violation
        raise NotASunflower(
            f"members {a},{b} and {c},{d} have different intersections"
        )
    return check.core


# ---------------------------------------------------------------------------
# ``.sets`` text format

_SET_RE = re.compile(r"\{\s*(\d+(?:\s*,\s*\d+)*)?\s*\}")


def parse_set(text: str) -> FiniteSet:
    m = _SET_RE.fullmatch(text.strip())
    if not m:
        raise SpecSyntaxError(f"malformed set {text.strip()!r}")
    body = m.group(1)
    if not body:
        return EMPTY
    values = [int(v) for v in body.split(",")]
    if len(set(values)) != len(values):
        raise SpecSyntaxError(f"repeated element in {text.strip()!r}")
    return FiniteSet(values)


def parse_sets(text: str) -> FiniteFamily:
    """Parse a ``.sets`` document: one set per line, ``#`` comments."""
    members: list[FiniteSet] = []
    seen: set[FiniteSet] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            s = parse_set(line)
        except SpecSyntaxError as exc:
            raise SpecSyntaxError(f"line {lineno}: {exc}") from None
        if s in seen:
            raise SpecSyntaxError(f"line {lineno}: duplicate member {s}")
        seen.add(s)
        members.append(s)
    return FiniteFamily(members)


def format_sets(f: Iterable[FiniteSet]) -> str:
    return "".join(f"{s}\n" for s in f)
