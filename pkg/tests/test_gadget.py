import pytest
from hypothesis import given, strategies as st

import oracles
from sunflower.cardinality import INFINITE, Cardinality
from sunflower.errors import PoolTooLarge
from sunflower.familyspec import enumerate_family, parse_table
from sunflower.gadget import (
    ConstAfter,
    FnTable,
    Identity,
    Mod,
    Undefined,
    e_intersection,
    eset,
    gadget_family,
    row_range,
    truncated_members,
    verify_claim,
)
from sunflower.pairing import pair, unpair

F = Cardinality.finite


@given(st.integers(0, 300), st.integers(0, 300))
def test_pairing_matches_diagonal_count(a, b):
    assert pair(a, b) == oracles.code(a, b)
    assert unpair(pair(a, b)) == (a, b)


@pytest.mark.parametrize("n, m, coded", [(2, 5, {0, 2, 5, 30}), (0, 0, {0}), (1, 0, {0, 2})])
def test_eset_examples(n, m, coded):
    assert eset(n, m).frozen == coded == oracles.e_coded(n, m)


@pytest.mark.parametrize("args, expected", [((2, 5, 3, 7), eset(2, 0)), ((4, 1, 4, 9), eset(4, 0)), ((0, 3, 1, 3), eset(0, 0))])
def test_e_intersection_examples(args, expected):
    assert e_intersection(*args) == expected
    assert expected.frozen == oracles.e_coded(min(args[0], args[2]), 0)


@given(st.integers(0, 30), st.integers(0, 30), st.integers(0, 30), st.integers(0, 30))
def test_e_intersection_law(n, m, n2, m2):
    if eset(n, m) != eset(n2, m2):
        assert e_intersection(n, m, n2, m2) == eset(min(n, n2), 0)


@given(st.integers(0, 20), st.integers(1, 20), st.integers(0, 20), st.integers(1, 20))
def test_eset_injective_off_the_backbone(n, m, n2, m2):
    assert (eset(n, m) == eset(n2, m2)) == ((n, m) == (n2, m2))


def test_row_range_examples():
    assert row_range(FnTable.of([Identity()]), 0) == INFINITE
    assert row_range(FnTable.of([Mod(3)]), 0) == F(3)
    assert row_range(FnTable.of([ConstAfter(2, 7)]), 0) == F(3)
    assert row_range(parse_table("explicit[(0,5),(1,5),(4,2)]"), 0) == F(2)
    assert row_range(FnTable.of([Undefined()]), 0) == F(0)
    assert row_range(FnTable.of([]), 7) == F(0)


def test_family_examples():
    members, _ = enumerate_family(gadget_family(FnTable.of([Undefined()])), 30, 1000)
    assert set(members) == {eset(n, 0) for n in range(30)}
    members, _ = enumerate_family(gadget_family(FnTable.of([Identity()])), 60, 1000)
    assert {eset(0, m) for m in range(6)} <= set(members)
    members, _ = enumerate_family(gadget_family(FnTable.of([Mod(2)])), 200, 1000)
    # row 0 adds E(0, v) for v in {0, 1}; every other size-2 member is backbone
    backbone = {eset(n, 0) for n in range(200)}
    assert {s for s in members if len(s) <= 2} - backbone == {eset(0, 1)}


def test_truncation_is_staged():
    t = FnTable.of([Identity()])
    pool = truncated_members(t, 5)
    # stages 0..5: backbone E(0..5, 0); pair(0, m) <= 5 for m = 0, 1, 2
    expected = {eset(s, 0) for s in range(6)} | {eset(0, m) for m in (1, 2)}
    assert set(pool) == expected


def test_verify_examples():
    report = verify_claim(parse_table("mod 2;explicit[(0,5),(1,5)]"), 20)
    assert report.classification_actual == 1 and report.max_sunflower_truncated <= 4
    report = verify_claim(parse_table("identity"), 20)
    assert report.classification_actual == 2 and report.witness_core == eset(0, 0)
    assert report.witness_prefix[:3] == [eset(0, 0), eset(0, 1), eset(0, 2)]
    report = verify_claim(parse_table("undefined;undefined"), 10)
    assert report.classification_actual == 1 and report.holds
    with pytest.raises(PoolTooLarge):
        verify_claim(parse_table("identity"), 100, guard=50)


def expected_max(t: FnTable, truncation: int) -> int:
    """Largest sunflower in the truncation, from the intersection law.

    Core E(r,0) admits E(r,0) itself, the row-r sets E(r,v) with v != 0, and
    at most one set with a larger n (any later backbone set).
    """
    seen: dict[int, set[int]] = {}
    for s in range(truncation + 1):
        n, m = unpair(s)
        v = t.value(n, m)
        if v is not None and v != 0:
            seen.setdefault(n, set()).add(v)
    return 2 + max((len(vs) for vs in seen.values()), default=0)


@pytest.mark.parametrize("text", ["mod 4;const_after 3 9", "identity;mod 2", "undefined;explicit[(1,4),(2,4),(3,8)]"])
def test_truncated_maximum_matches_derived_formula(text):
    t = parse_table(text)
    for truncation in (15, 30, 60):
        assert verify_claim(t, truncation).max_sunflower_truncated == expected_max(t, truncation)
