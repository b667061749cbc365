import pytest
from hypothesis import given, settings, strategies as st

import oracles
from sunflower.cardinality import INFINITE, UNKNOWN, Cardinality, GroundTruth
from sunflower.errors import ArityError, NonPositiveParameter, SpecSyntaxError
from sunflower.familyspec import (
    Explicit,
    GradedBlocks,
    InitialSegments,
    Link,
    Matching,
    Slice,
    Star,
    Strip,
    Union,
    contains_member,
    enumerate_family,
    ground_truth_sunflower,
    member_count,
    parse_spec,
    point_degree,
    size_class_count,
)
from sunflower.setcore import FiniteFamily, FiniteSet, fset

F = Cardinality.finite

BUILT_INS = [
    "initial_segments",
    "graded_blocks",
    "matching(1)",
    "matching(3)",
    "star({})",
    "star({0,2})",
    "union(star({0}),matching(2))",
    "union(initial_segments,graded_blocks)",
    "link(0,initial_segments)",
    "strip(0,star({0,1}))",
    "slice(3,graded_blocks)",
    "pad(4,star({1}))",
    "link(3,pad(3,matching(2)))",
    "gadget(identity;mod 2)",
    "explicit{{0},{1,2}}",
]


@pytest.mark.parametrize("text, node", [
    ("matching(2)", Matching(2)),
    ("union(star({0}), initial_segments)", Union(Star(fset(0)), InitialSegments())),
    ("link(0, slice(2, initial_segments))", Link(0, Slice(2, InitialSegments()))),
])
def test_parse_examples(text, node):
    assert parse_spec(text) == node


@pytest.mark.parametrize("text", BUILT_INS)
def test_str_round_trips(text):
    spec = parse_spec(text)
    assert parse_spec(str(spec)) == spec


@pytest.mark.parametrize("text, error", [
    ("matching(0)", NonPositiveParameter),
    ("pad(0,initial_segments)", NonPositiveParameter),
    ("matching(2,3)", ArityError),
    ("union(initial_segments)", ArityError),
    ("bogus", SpecSyntaxError),
    ("star({0,1)", SpecSyntaxError),
    ("initial_segments initial_segments", SpecSyntaxError),
    ("explicit{{}}", SpecSyntaxError),
])
def test_parse_errors(text, error):
    with pytest.raises(error) as info:
        parse_spec(text)
    assert info.value.position is not None


def test_enumeration_examples():
    def first(spec, k):
        members, exhausted = enumerate_family(spec, k, 1000)
        assert not exhausted
        return [str(s) for s in members]

    assert first(InitialSegments(), 3) == ["{0}", "{0,1}", "{0,1,2}"]
    assert first(GradedBlocks(), 3) == ["{0,9}", "{0,2,15}", "{0,2,25}"]
    assert first(Matching(2), 2) == ["{0,1}", "{2,3}"]
    assert first(Star(fset(3)), 2) == ["{3,4}", "{3,5}"]


def test_union_alternates_and_suppresses_duplicates():
    members, _ = enumerate_family(Union(Star(fset(0)), Matching(2)), 4, 1000)
    assert [str(s) for s in members] == ["{0,1}", "{0,2}", "{2,3}", "{0,3}"]


def test_exhaustion_is_reported():
    members, exhausted = enumerate_family(Link(0, Matching(2)), 2, 50)
    assert exhausted and [str(s) for s in members] == ["{0,1}"]


@pytest.mark.parametrize("spec, expected", [
    (Explicit(FiniteFamily([fset(0), fset(1)])), F(2)),
    (InitialSegments(), INFINITE),
    (Link(7, Matching(2)), F(1)),
    (Link(0, Union(InitialSegments(), Matching(2))), INFINITE),
    (Slice(2, InitialSegments()), F(1)),
    (Strip(5, Matching(3)), F(1)),
])
def test_member_count(spec, expected):
    assert member_count(spec) == expected


def test_size_class_examples():
    assert size_class_count(Star(fset(0)), 2) == INFINITE
    for m in range(1, 8):
        assert size_class_count(GradedBlocks(), m + 1) == F(m)
    assert size_class_count(InitialSegments(), 0) == F(0)


def test_point_degree_examples():
    assert point_degree(InitialSegments(), 2) == INFINITE
    assert point_degree(Matching(2), 3) == F(1)
    assert point_degree(Star(fset(0)), 0) == INFINITE


def test_ground_truth_examples():
    assert ground_truth_sunflower(Matching(2)) is GroundTruth.YES
    assert ground_truth_sunflower(InitialSegments()) is GroundTruth.NO
    assert ground_truth_sunflower(GradedBlocks()) is GroundTruth.NO
    assert ground_truth_sunflower(Explicit(FiniteFamily([fset(0)]))) is GroundTruth.NO
    assert ground_truth_sunflower(parse_spec("union(initial_segments,graded_blocks)")) is GroundTruth.NO
    assert ground_truth_sunflower(parse_spec("link(0,union(initial_segments,star({1})))")) is GroundTruth.UNKNOWN


def test_built_ins_match_definitions():
    members, _ = enumerate_family(InitialSegments(), 12, 1000)
    assert [s.frozen for s in members] == oracles.initial_segments(12)
    members, _ = enumerate_family(GradedBlocks(), 21, 1000)
    assert [s.frozen for s in members] == oracles.graded_blocks(6)


def test_graded_blocks_intersections():
    blocks = oracles.graded_blocks(6)
    members, _ = enumerate_family(GradedBlocks(), len(blocks), 1000)
    for p in members:
        for q in members:
            if p == q:
                continue
            low = min(len(p), len(q)) - 1
            assert (p & q).frozen == frozenset(range(0, 2 * low, 2))


@settings(deadline=None, max_examples=40)
@given(st.sampled_from(BUILT_INS), st.integers(1, 30))
def test_enumeration_is_prefix_stable(text, k):
    spec = parse_spec(text)
    a, _ = enumerate_family(spec, k, 5000)
    b, _ = enumerate_family(spec, k + 1, 5000)
    assert list(b[: len(a)]) == list(a)
    assert len(set(b)) == len(b)


@pytest.mark.parametrize("text", BUILT_INS)
def test_oracles_agree_with_enumeration(text):
    spec = parse_spec(text)
    prefix, _ = enumerate_family(spec, 60, 20_000)
    count = member_count(spec)
    if count.is_finite:
        full, exhausted = enumerate_family(spec, count.count + 1, 20_000)
        assert len(full) == count.count
    for n in range(1, 5):
        c = size_class_count(spec, n)
        seen = sum(1 for s in prefix if len(s) == n)
        if c.is_finite and count.is_finite:
            assert seen == c.count
        elif c.is_finite:
            assert seen <= c.count
    for a in range(6):
        d = point_degree(spec, a)
        seen = sum(1 for s in prefix if a in s)
        if d.is_finite:
            assert seen <= d.count
    for s in prefix:
        assert contains_member(spec, s) == F(1)
    assert contains_member(spec, FiniteSet([97, 98, 99, 1000])) in (F(0), UNKNOWN)


def test_derived_spec_semantics():
    base = Union(InitialSegments(), Matching(2))
    for s in enumerate_family(Link(3, base), 10, 5000)[0]:
        assert 3 in s
    parents = set(enumerate_family(base, 400, 5000)[0])
    for s in enumerate_family(Strip(1, base), 10, 5000)[0]:
        assert 1 not in s and (s | (1,)) in parents
    for s in enumerate_family(Slice(2, base), 10, 5000)[0]:
        assert len(s) == 2


def test_explicit_rejects_empty_member():
    with pytest.raises(ValueError):
        Explicit(FiniteFamily([FiniteSet()]))
