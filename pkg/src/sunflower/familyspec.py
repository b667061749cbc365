"""Declarative families of finite sets.

A :class:`FamilySpec` is a small AST describing a finite or countably
infinite family.  Every node supports four things:

``ticks()``
    A fresh generator over *candidates*: each item is either a member or
    ``None`` (a candidate examined and rejected).  Budgets count ticks, so a
    filtered spec over an infinite parent keeps making observable progress
    even when it produces no members.
``count(required, size)``
    Exact number of members containing ``required`` (and of the given size,
    if any) as a :class:`Cardinality`.  This one method backs the member
    count, size-class and point-degree oracles.  It answers Unknown rather
    than guess.
``size_bounds()``
    Certified ``(lo, hi)`` with ``lo <= |s| <= hi`` for every member
    (``hi`` is ``None`` when unbounded or uncertified).
``degrees_finite()``
    True if every point has finite degree, False if some point has infinite
    degree, ``None`` if not certifiable.

The empty set is never a member of any family.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from .cardinality import FINITE_ZERO, INFINITE, UNKNOWN, Cardinality, GroundTruth
from .errors import (
    ArityError,
    BoundViolation,
    NonPositiveParameter,
    SpecSyntaxError,
)
from .pairing import pair, unpair
from .setcore import EMPTY, FiniteFamily, FiniteSet, initial_segment
from .tables import (
    ConstAfter,
    ExplicitRow,
    FnTable,
    Identity,
    Mod,
    RowSpec,
    Undefined,
    backbone,
    eset,
)

Ticks = Iterator["FiniteSet | None"]

# candidates an oracle may examine while certifying an answer by search
ORACLE_BUDGET = 100_000

_NO_REQ: frozenset[int] = frozenset()


def _one_if(cond: bool) -> Cardinality:
    return Cardinality.finite(1 if cond else 0)


class FamilySpec:
    def ticks(self) -> Ticks:
        raise NotImplementedError

    def count(self, required: frozenset[int] = _NO_REQ, size: int | None = None) -> Cardinality:
        raise NotImplementedError

    def size_bounds(self) -> tuple[int, int | None]:
        raise NotImplementedError

    def degrees_finite(self) -> bool | None:
        return None

    def _truth(self) -> GroundTruth:
        return GroundTruth.UNKNOWN

    def __iter__(self) -> Iterator[FiniteSet]:
        """All members, unmetered (may not terminate for sparse filters)."""
        return (s for s in self.ticks() if s is not None)


@dataclass(frozen=True)
class Explicit(FamilySpec):
    members: FiniteFamily

    def __post_init__(self) -> None:
        if EMPTY in self.members:
            raise ValueError("the empty set cannot be a family member")

    def ticks(self) -> Ticks:
        yield from self.members

    def count(self, required=_NO_REQ, size=None) -> Cardinality:
        return Cardinality.finite(sum(
            1 for s in self.members
            if required <= s.frozen and (size is None or len(s) == size)
        ))

    def size_bounds(self):
        sizes = [len(s) for s in self.members]
        return (min(sizes), max(sizes)) if sizes else (0, 0)

    def degrees_finite(self):
        return True

    def _truth(self):
        return GroundTruth.NO

    def __str__(self) -> str:
        return "explicit{" + ",".join(map(str, self.members)) + "}"


@dataclass(frozen=True)
class InitialSegments(FamilySpec):
    """[1], [2], [3], ...  (the empty segment [0] is excluded)."""

    def ticks(self) -> Ticks:
        n = 1
        while True:
            yield initial_segment(n)
            n += 1

    def count(self, required=_NO_REQ, size=None) -> Cardinality:
        least = max(required) + 1 if required else 1
        if size is None:
            return INFINITE
        return _one_if(size >= least)

    def size_bounds(self):
        return 1, None

    def degrees_finite(self):
        return False

    def _truth(self):
        return GroundTruth.NO

    def __str__(self) -> str:
        return "initial_segments"


@dataclass(frozen=True)
class Matching(FamilySpec):
    """Consecutive disjoint blocks {kw, ..., kw + w - 1}."""

    w: int

    def __post_init__(self) -> None:
        if self.w < 1:
            raise NonPositiveParameter(f"matching width must be positive, got {self.w}")

    def ticks(self) -> Ticks:
        k = 0
        while True:
            yield FiniteSet(range(k * self.w, (k + 1) * self.w))
            k += 1

    def count(self, required=_NO_REQ, size=None) -> Cardinality:
        if size is not None and size != self.w:
            return FINITE_ZERO
        if not required:
            return INFINITE
        return _one_if(len({x // self.w for x in required}) == 1)

    def size_bounds(self):
        return self.w, self.w

    def degrees_finite(self):
        return True

    def _truth(self):
        return GroundTruth.YES

    def __str__(self) -> str:
        return f"matching({self.w})"


@dataclass(frozen=True)
class Star(FamilySpec):
    """c u {x} for every x > max(c)."""

    c: FiniteSet

    def ticks(self) -> Ticks:
        x = self.c.max() + 1
        while True:
            yield self.c | (x,)
            x += 1

    def count(self, required=_NO_REQ, size=None) -> Cardinality:
        if size is not None and size != len(self.c) + 1:
            return FINITE_ZERO
        extra = required - self.c.frozen
        if not extra:
            return INFINITE
        if len(extra) > 1:
            return FINITE_ZERO
        (x,) = extra
        return _one_if(x > self.c.max())

    def size_bounds(self):
        return len(self.c) + 1, len(self.c) + 1

    def degrees_finite(self):
        return not self.c

    def _truth(self):
        return GroundTruth.YES

    def __str__(self) -> str:
        return f"star({self.c})"


def graded_core(m: int) -> frozenset[int]:
    return frozenset(range(0, 2 * m, 2))


def graded_member(m: int, j: int) -> FiniteSet:
    return FiniteSet(graded_core(m) | {2 * pair(m, j) + 1})


@dataclass(frozen=True)
class GradedBlocks(FamilySpec):
    """Block m >= 1: the core {0, 2, ..., 2(m-1)} plus one odd petal 2*pair(m, j)+1, 1 <= j <= m."""

    def ticks(self) -> Ticks:
        m = 1
        while True:
            for j in range(1, m + 1):
                yield graded_member(m, j)
            m += 1

    def count(self, required=_NO_REQ, size=None) -> Cardinality:
        evens = [x for x in required if x % 2 == 0]
        odds = [x for x in required if x % 2 == 1]
        least = max(evens) // 2 + 1 if evens else 1
        if len(odds) > 1:
            return FINITE_ZERO
        if odds:
            m, j = unpair((odds[0] - 1) // 2)
            ok = m >= 1 and 1 <= j <= m and m >= least
            return _one_if(ok and (size is None or size == m + 1))
        if size is None:
            return INFINITE
        m = size - 1
        return Cardinality.finite(m if m >= 1 and m >= least else 0)

    def size_bounds(self):
        return 2, None

    def degrees_finite(self):
        return False

    def _truth(self):
        return GroundTruth.NO

    def __str__(self) -> str:
        return "graded_blocks"


def _collect(spec: FamilySpec, required: frozenset[int], size: int | None,
             count: int, budget: int) -> set[FiniteSet] | None:
    """Find exactly ``count`` members matching the filter, or ``None`` on budget."""
    found: set[FiniteSet] = set()
    if count == 0:
        return found
    for examined, s in enumerate(spec.ticks()):
        if examined >= budget:
            return None
        if s is not None and required <= s.frozen and (size is None or len(s) == size):
            found.add(s)
            if len(found) == count:
                return found
    return found


@dataclass(frozen=True)
class Union(FamilySpec):
    left: FamilySpec
    right: FamilySpec

    def ticks(self) -> Ticks:
        seen: set[FiniteSet] = set()
        streams = [self.left.ticks(), self.right.ticks()]
        while streams:
            for it in list(streams):
                try:
                    s = next(it)
                except StopIteration:
                    streams.remove(it)
                    continue
                if s is None or s in seen:
                    yield None
                else:
                    seen.add(s)
                    yield s

    def count(self, required=_NO_REQ, size=None) -> Cardinality:
        a = self.left.count(required, size)
        b = self.right.count(required, size)
        if a.is_infinite or b.is_infinite:
            return INFINITE
        if a.is_unknown or b.is_unknown:
            return UNKNOWN
        # the sides may overlap, so materialize both and count the union
        sa = _collect(self.left, required, size, a.count, ORACLE_BUDGET)
        sb = _collect(self.right, required, size, b.count, ORACLE_BUDGET)
        if sa is None or sb is None:
            return UNKNOWN
        return Cardinality.finite(len(sa | sb))

    def size_bounds(self):
        lo1, hi1 = self.left.size_bounds()
        lo2, hi2 = self.right.size_bounds()
        hi = None if hi1 is None or hi2 is None else max(hi1, hi2)
        return min(lo1, lo2), hi

    def degrees_finite(self):
        a, b = self.left.degrees_finite(), self.right.degrees_finite()
        if a is False or b is False:
            return False
        if a and b:
            return True
        return None

    def _truth(self):
        # an infinite sunflower keeps infinitely many members on one side
        sides = (ground_truth_sunflower(self.left), ground_truth_sunflower(self.right))
        if GroundTruth.YES in sides:
            return GroundTruth.YES
        if sides == (GroundTruth.NO, GroundTruth.NO):
            return GroundTruth.NO
        return GroundTruth.UNKNOWN

    def __str__(self) -> str:
        return f"union({self.left},{self.right})"


def pad_image(s: FiniteSet, n: int, counter: int) -> tuple[FiniteSet, int]:
    """Image of ``s`` under padding to size ``n``, allocating fresh codes from ``counter``."""
    if len(s) > n:
        raise BoundViolation(s, n)
    fresh = range(counter, counter + n - len(s))
    image = FiniteSet([2 * a for a in s] + [2 * j + 1 for j in fresh])
    return image, counter + len(fresh)


@dataclass(frozen=True)
class Pad(FamilySpec):
    """Every member padded to exactly ``n`` elements.

    Original elements a are coded 2a, fresh elements j are coded 2j+1,
    allocated from one counter in enumeration order.
    """

    n: int
    inner: FamilySpec

    def __post_init__(self) -> None:
        if self.n < 1:
            raise NonPositiveParameter(f"pad bound must be positive, got {self.n}")

    def ticks(self) -> Ticks:
        counter = 0
        for s in self.inner.ticks():
            if s is None:
                yield None
                continue
            image, counter = pad_image(s, self.n, counter)
            yield image

    def _owner_of_fresh(self, j: int) -> FiniteSet | None | bool:
        """Image holding fresh code j; ``None`` if never allocated, ``False`` on budget."""
        if self.inner.size_bounds()[0] >= self.n:
            return None
        counter = 0
        for examined, s in enumerate(self.inner.ticks()):
            if examined >= ORACLE_BUDGET:
                return False
            if s is None:
                continue
            image, counter = pad_image(s, self.n, counter)
            if counter > j:
                return image
        return None

    def count(self, required=_NO_REQ, size=None) -> Cardinality:
        if size is not None and size != self.n:
            return FINITE_ZERO
        odds = [x for x in required if x % 2 == 1]
        if not odds:
            return self.inner.count(frozenset(x // 2 for x in required), None)
        owner = self._owner_of_fresh((odds[0] - 1) // 2)
        if owner is False:
            return UNKNOWN
        return _one_if(owner is not None and required <= owner.frozen)

    def size_bounds(self):
        return self.n, self.n

    def degrees_finite(self):
        return self.inner.degrees_finite()

    def _truth(self):
        return ground_truth_sunflower(self.inner)

    def __str__(self) -> str:
        return f"pad({self.n},{self.inner})"


@dataclass(frozen=True)
class Link(FamilySpec):
    """Members of ``inner`` containing the point ``a``."""

    a: int
    inner: FamilySpec

    def ticks(self) -> Ticks:
        for s in self.inner.ticks():
            yield s if s is not None and self.a in s else None

    def count(self, required=_NO_REQ, size=None) -> Cardinality:
        return self.inner.count(required | {self.a}, size)

    def size_bounds(self):
        lo, hi = self.inner.size_bounds()
        return max(lo, 1), hi

    def degrees_finite(self):
        return True if self.inner.degrees_finite() else None

    def _truth(self):
        if ground_truth_sunflower(self.inner) is GroundTruth.NO:
            return GroundTruth.NO
        return GroundTruth.UNKNOWN

    def __str__(self) -> str:
        return f"link({self.a},{self.inner})"


@dataclass(frozen=True)
class Strip(FamilySpec):
    """s - {a} for members s of ``inner`` containing a ({a} itself would give the empty set and is dropped)."""

    a: int
    inner: FamilySpec

    def ticks(self) -> Ticks:
        for s in self.inner.ticks():
            if s is not None and self.a in s and len(s) > 1:
                yield s - (self.a,)
            else:
                yield None

    def count(self, required=_NO_REQ, size=None) -> Cardinality:
        if self.a in required or size == 0:
            return FINITE_ZERO
        if size is not None:
            return self.inner.count(required | {self.a}, size + 1)
        c = self.inner.count(required | {self.a}, None)
        if required or not c.is_finite:
            return c
        singleton = self.inner.count(frozenset({self.a}), 1)
        if not singleton.is_finite:
            return UNKNOWN
        return Cardinality.finite(c.count - singleton.count)

    def size_bounds(self):
        lo, hi = self.inner.size_bounds()
        return max(lo - 1, 1), None if hi is None else max(hi - 1, 1)

    def degrees_finite(self):
        return True if self.inner.degrees_finite() else None

    def _truth(self):
        return ground_truth_sunflower(Link(self.a, self.inner))

    def __str__(self) -> str:
        return f"strip({self.a},{self.inner})"


@dataclass(frozen=True)
class Slice(FamilySpec):
    """Members of ``inner`` of size exactly ``n``."""

    n: int
    inner: FamilySpec

    def ticks(self) -> Ticks:
        for s in self.inner.ticks():
            yield s if s is not None and len(s) == self.n else None

    def count(self, required=_NO_REQ, size=None) -> Cardinality:
        if size is not None and size != self.n:
            return FINITE_ZERO
        return self.inner.count(required, self.n)

    def size_bounds(self):
        return self.n, self.n

    def degrees_finite(self):
        return True if self.inner.degrees_finite() else None

    def _truth(self):
        if ground_truth_sunflower(self.inner) is GroundTruth.NO:
            return GroundTruth.NO
        return GroundTruth.UNKNOWN

    def __str__(self) -> str:
        return f"slice({self.n},{self.inner})"


@dataclass(frozen=True)
class Gadget(FamilySpec):
    """E(n, 0) for every n, plus E(n, f_n(m)) wherever row n is defined at m.

    Enumeration is staged: stage s emits E(s, 0), then E(n, f_n(m)) for the
    (n, m) with pair(n, m) = s when defined.
    """

    table: FnTable

    def ticks(self) -> Ticks:
        seen: set[FiniteSet] = set()
        s = 0
        while True:
            first = eset(s, 0)
            seen.add(first)
            yield first
            n, m = unpair(s)
            v = self.table.value(n, m)
            e = None if v is None else eset(n, v)
            if e is None or e in seen:
                yield None
            else:
                seen.add(e)
                yield e
            s += 1

    def count(self, required=_NO_REQ, size=None) -> Cardinality:
        spine: list[int] = []
        tips: list[tuple[int, int]] = []
        for x in required:
            a, b = unpair(x)
            if a == 0:
                spine.append(b)
            else:
                tips.append((a, b))
        least = max(spine, default=0)
        if len(tips) > 1:
            return FINITE_ZERO
        if tips:
            (v, n), = tips
            ok = n >= least and self.table.row(n).in_range(v)
            return _one_if(ok and (size is None or size == n + 2))
        if size is None:
            return INFINITE
        # E(size-1, 0) has size `size`; E(size-2, v) with v != 0 too
        total = _one_if(size >= 1 and size - 1 >= least)
        n = size - 2
        if n >= least:
            total = total + self.table.row(n).nonzero_range_card()
        return total

    def size_bounds(self):
        return 1, None

    def degrees_finite(self):
        return False

    def _truth(self):
        return GroundTruth.YES if self.table.infinite_rows() else GroundTruth.NO

    def __str__(self) -> str:
        return f"gadget({self.table})"


def gadget_row_ticks(table: FnTable, n: int) -> Ticks:
    """E(n, 0) followed by E(n, f_n(m)) for m = 0, 1, ... (duplicates rejected)."""
    first = eset(n, 0)
    seen = {first}
    yield first
    row = table.row(n)
    m = 0
    while True:
        v = row.value(m)
        e = None if v is None else eset(n, v)
        if e is None or e in seen:
            yield None
        else:
            seen.add(e)
            yield e
        m += 1


# ---------------------------------------------------------------------------
# public operations


def enumerate_family(f: FamilySpec, k: int, budget: int) -> tuple[FiniteFamily, bool]:
    """First ``k`` members of ``f`` in canonical order.

    Returns the members and an ``exhausted`` flag that is set when the
    budget of examined candidates ran out before ``k`` members were found.
    """
    if budget < k:
        raise ValueError("budget must be at least k")
    out: list[FiniteSet] = []
    if k == 0:
        return FiniteFamily(), False
    for examined, s in enumerate(f.ticks(), start=1):
        if s is not None:
            out.append(s)
            if len(out) == k:
                return FiniteFamily(out), False
        if examined >= budget:
            return FiniteFamily(out), True
    return FiniteFamily(out), False


def member_count(f: FamilySpec) -> Cardinality:
    return f.count()


def size_class_count(f: FamilySpec, n: int) -> Cardinality:
    if n == 0:
        return FINITE_ZERO
    return f.count(_NO_REQ, n)


def point_degree(f: FamilySpec, a: int) -> Cardinality:
    return f.count(frozenset({a}), None)


def contains_member(f: FamilySpec, s: FiniteSet) -> Cardinality:
    """Finite(1) if ``s`` is a member, Finite(0) if not (structural, no search)."""
    return f.count(s.frozen, len(s))


def ground_truth_sunflower(f: FamilySpec) -> GroundTruth:
    """Certified answer to 'does f contain an infinite sunflower?'.

    Finite families never do.  Beyond the per-node rules, any certifiably
    size-bounded infinite family does: some size class is infinite, and an
    infinite uniform family always contains an infinite sunflower.
    """
    count = member_count(f)
    if count.is_finite:
        return GroundTruth.NO
    truth = f._truth()
    if truth is GroundTruth.UNKNOWN and count.is_infinite and f.size_bounds()[1] is not None:
        return GroundTruth.YES
    return truth


# ---------------------------------------------------------------------------
# `.fam` parser

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_]+)|(.))", re.S)


@dataclass
class _Tok:
    kind: str  # "int", "name", "punct", "end"
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    pos = 0
    while text[pos:].strip():
        m = _TOKEN_RE.match(text, pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            toks.append(_Tok("int", m.group(1), start))
        elif m.group(2) is not None:
            toks.append(_Tok("name", m.group(2).lower(), start))
        else:
            ch = m.group(3)
            if ch not in "{}()[],;":
                raise SpecSyntaxError(f"unexpected character {ch!r}", start)
            toks.append(_Tok("punct", ch, start))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str) -> None:
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, ch: str, *, arity_of: str | None = None) -> None:
        t = self.tok
        if t.kind == "punct" and t.text == ch:
            self.i += 1
            return
        if arity_of and t.kind == "punct" and t.text in ",)" and ch in ",)":
            raise ArityError(f"wrong number of arguments to {arity_of}", t.pos)
        raise SpecSyntaxError(f"expected {ch!r}, found {t.text or 'end of input'!r}", t.pos)

    def at(self, ch: str) -> bool:
        return self.tok.kind == "punct" and self.tok.text == ch

    def integer(self) -> int:
        t = self.tok
        if t.kind != "int":
            raise SpecSyntaxError(f"expected an integer, found {t.text or 'end of input'!r}", t.pos)
        self.i += 1
        return int(t.text)

    def finite_set(self) -> FiniteSet:
        start = self.tok.pos
        self.expect("{")
        values: list[int] = []
        if not self.at("}"):
            values.append(self.integer())
            while self.at(","):
                self.take()
                values.append(self.integer())
        self.expect("}")
        if len(set(values)) != len(values):
            raise SpecSyntaxError("repeated element in set", start)
        return FiniteSet(values)

    def spec(self) -> FamilySpec:
        t = self.take()
        if t.kind != "name":
            raise SpecSyntaxError(f"expected a family name, found {t.text or 'end of input'!r}", t.pos)
        name = t.text
        if name == "initial_segments":
            return InitialSegments()
        if name == "graded_blocks":
            return GradedBlocks()
        if name == "explicit":
            self.expect("{")
            sets = [self.finite_set()]
            while self.at(","):
                self.take()
                sets.append(self.finite_set())
            self.expect("}")
            if EMPTY in sets:
                raise SpecSyntaxError("the empty set cannot be a family member", t.pos)
            if len(set(sets)) != len(sets):
                raise SpecSyntaxError("duplicate member in explicit family", t.pos)
            return Explicit(FiniteFamily(sets))
        if name in ("matching", "star", "gadget"):
            self.expect("(")
            if name == "matching":
                w = self.integer()
                self.expect(")", arity_of=name)
                if w < 1:
                    raise NonPositiveParameter("matching width must be positive", t.pos)
                return Matching(w)
            if name == "star":
                c = self.finite_set()
                self.expect(")", arity_of=name)
                return Star(c)
            table = self.table()
            self.expect(")", arity_of=name)
            return Gadget(table)
        if name == "union":
            self.expect("(")
            left = self.spec()
            self.expect(",", arity_of=name)
            right = self.spec()
            self.expect(")", arity_of=name)
            return Union(left, right)
        if name in ("pad", "link", "strip", "slice"):
            self.expect("(")
            k = self.integer()
            self.expect(",", arity_of=name)
            inner = self.spec()
            self.expect(")", arity_of=name)
            if name == "pad":
                if k < 1:
                    raise NonPositiveParameter("pad bound must be positive", t.pos)
                return Pad(k, inner)
            return {"link": Link, "strip": Strip, "slice": Slice}[name](k, inner)
        raise SpecSyntaxError(f"unknown family {name!r}", t.pos)

    def table(self) -> FnTable:
        rows: list[RowSpec] = []
        if self.at(")") or self.tok.kind == "end":
            return FnTable()
        rows.append(self.row())
        while self.at(";"):
            self.take()
            rows.append(self.row())
        return FnTable(tuple(rows))

    def row(self) -> RowSpec:
        t = self.take()
        if t.kind != "name":
            raise SpecSyntaxError(f"expected a row, found {t.text or 'end of input'!r}", t.pos)
        if t.text == "identity":
            return Identity()
        if t.text == "undefined":
            return Undefined()
        if t.text == "mod":
            p = self.integer()
            if p < 1:
                raise NonPositiveParameter("mod needs a positive modulus", t.pos)
            return Mod(p)
        if t.text == "const_after":
            return ConstAfter(self.integer(), self.integer())
        if t.text == "explicit":
            self.expect("[")
            pairs: list[tuple[int, int]] = []
            while self.at("("):
                self.take()
                m = self.integer()
                self.expect(",")
                v = self.integer()
                self.expect(")")
                pairs.append((m, v))
                if self.at(","):
                    self.take()
            self.expect("]")
            if len({m for m, _ in pairs}) != len(pairs):
                raise SpecSyntaxError("explicit row defines some argument twice", t.pos)
            return ExplicitRow(tuple(pairs))
        raise SpecSyntaxError(f"unknown row kind {t.text!r}", t.pos)


def parse_spec(text: str) -> FamilySpec:
    p = _Parser(text)
    spec = p.spec()
    if p.tok.kind != "end":
        raise SpecSyntaxError(f"trailing input {p.tok.text!r}", p.tok.pos)
    return spec


def parse_table(text: str) -> FnTable:
    p = _Parser(text)
    table = p.table()
    if p.tok.kind != "end":
        raise SpecSyntaxError(f"trailing input {p.tok.text!r}", p.tok.pos)
    return table


__all__ = [
    "FamilySpec", "Explicit", "InitialSegments", "Matching", "Star", "GradedBlocks",
    "Union", "Pad", "Link", "Strip", "Slice", "Gadget", "gadget_row_ticks",
    "enumerate_family", "member_count", "size_class_count", "point_degree",
    "contains_member", "ground_truth_sunflower", "parse_spec", "parse_table",
    "graded_core", "graded_member", "pad_image", "backbone", "ORACLE_BUDGET",
]
