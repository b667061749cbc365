"""Padding a size-bounded family to a constant-size one.

Each member s with |s| <= n is sent to {2a : a in s} plus n - |s| fresh odd
codes 2j+1, with j drawn from a single counter in enumeration order.  Fresh
codes are never shared, so for distinct sources x, y the images meet in
exactly {2a : a in x & y}; in particular sunflowers map to sunflowers and
back.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BoundViolation, NonPositiveParameter, UncertifiedBound
from .familyspec import (
    ORACLE_BUDGET,
    Explicit,
    FamilySpec,
    Pad,
    pad_image,
    size_class_count,
)
from .setcore import FiniteFamily, FiniteSet


@dataclass
class PaddedFamily:
    target: FiniteFamily | FamilySpec
    bound: int
    mapping: dict[FiniteSet, FiniteSet] = field(default_factory=dict)
    # fresh element indices j allocated to each source, in enumeration order
    counter_trace: list[tuple[int, ...]] = field(default_factory=list)

    def image(self, s: FiniteSet) -> FiniteSet:
        return self.mapping[s]

    def materialize(self, k: int, budget: int = ORACLE_BUDGET) -> FiniteFamily:
        """Pad the first ``k`` source members of a lazy target, filling ``mapping``."""
        if isinstance(self.target, FiniteFamily):
            return FiniteFamily(self.target[:k])
        assert isinstance(self.target, Pad)
        self.mapping.clear()
        self.counter_trace.clear()
        counter = 0
        out: list[FiniteSet] = []
        for examined, s in enumerate(self.target.inner.ticks()):
            if len(out) == k or examined >= budget:
                break
            if s is None:
                continue
            image, nxt = pad_image(s, self.bound, counter)
            self.mapping[s] = image
            self.counter_trace.append(tuple(range(counter, nxt)))
            counter = nxt
            out.append(image)
        return FiniteFamily(out)


def _pad_explicit(x: FiniteFamily, n: int) -> PaddedFamily:
    mapping: dict[FiniteSet, FiniteSet] = {}
    trace: list[tuple[int, ...]] = []
    counter = 0
    images = []
    for s in x:
        image, nxt = pad_image(s, n, counter)
        mapping[s] = image
        trace.append(tuple(range(counter, nxt)))
        counter = nxt
        images.append(image)
    return PaddedFamily(FiniteFamily(images), n, mapping, trace)


def _certify_bound(f: FamilySpec, n: int, budget: int) -> None:
    lo, hi = f.size_bounds()
    if hi is not None and hi <= n:
        return
    if hi is not None:
        # finitely many size classes above n: each must be certifiably empty
        for size in range(n + 1, hi + 1):
            c = size_class_count(f, size)
            if c.is_unknown:
                raise UncertifiedBound(f"cannot certify that {f} has no members of size {size}")
            if not (c.is_finite and c.count == 0):
                break
        else:
            return
    # look for an explicit counterexample before giving up
    for examined, s in enumerate(f.ticks()):
        if examined >= budget:
            break
        if s is not None and len(s) > n:
            raise BoundViolation(s, n)
    raise UncertifiedBound(f"cannot certify that every member of {f} has at most {n} elements")


def pad_family(x: FiniteFamily | FamilySpec, n: int, budget: int = ORACLE_BUDGET) -> PaddedFamily:
    if n < 1:
        raise NonPositiveParameter("padding bound must be positive")
    if isinstance(x, Explicit):
        x = x.members
    if isinstance(x, FiniteFamily):
        return _pad_explicit(x, n)
    _certify_bound(x, n, budget)
    return PaddedFamily(Pad(n, x), n)


def unpad_set(p: FiniteSet) -> FiniteSet:
    """The original part {a : 2a in p} of a padded set."""
    return FiniteSet(x // 2 for x in p if x % 2 == 0)
