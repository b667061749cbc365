import pytest
from hypothesis import given, strategies as st

from oracles import all_pairs_sunflower
from sunflower.errors import NotASunflower, SpecSyntaxError
from sunflower.setcore import (
    EMPTY,
    FiniteFamily,
    FiniteSet,
    core_of,
    format_sets,
    fset,
    initial_segment,
    intersect,
    is_sunflower,
    parse_set,
    parse_sets,
)

small_sets = st.frozensets(st.integers(0, 9), min_size=1, max_size=5)
families = st.lists(small_sets, max_size=8, unique=True)


def test_finite_set_is_sorted_and_deduplicated():
    s = FiniteSet([3, 1, 3, 0])
    assert s.elements == (0, 1, 3)
    assert s.size() == 3
    assert str(s) == "{0,1,3}"


def test_finite_set_rejects_negative_and_non_integers():
    with pytest.raises(ValueError):
        FiniteSet([-1])
    with pytest.raises((TypeError, ValueError)):
        FiniteSet([1.5])


@pytest.mark.parametrize("p, q, expected", [
    (fset(0, 1, 2), fset(0, 1, 3), fset(0, 1)),
    (fset(0), fset(1, 2), EMPTY),
    (initial_segment(2), initial_segment(3), initial_segment(2)),
])
def test_intersect_examples(p, q, expected):
    assert intersect(p, q) == expected


def test_is_sunflower_examples():
    check = is_sunflower(FiniteFamily([fset(0, 1, 2), fset(0, 1, 3), fset(0, 1, 4)]))
    assert check.verdict and check.core == fset(0, 1) and check.violation is None

    check = is_sunflower(FiniteFamily([initial_segment(1), initial_segment(2), initial_segment(3)]))
    assert not check.verdict
    assert check.violation == ((0, 1), (1, 2))

    check = is_sunflower(FiniteFamily([fset(0, 1), fset(2, 3), fset(4, 5)]))
    assert check.verdict and check.core == EMPTY


def test_small_families_have_undetermined_core():
    for fam in (FiniteFamily(), FiniteFamily([fset(5)])):
        check = is_sunflower(fam)
        assert check.verdict and check.core is None


def test_core_of_examples():
    assert core_of(FiniteFamily([fset(0, 9), fset(0, 2, 15)])) == fset(0)
    assert core_of(FiniteFamily([fset(5)])) is None
    assert core_of(FiniteFamily([fset(0, 1), fset(2, 3)])) == EMPTY
    with pytest.raises(NotASunflower):
        core_of(FiniteFamily([fset(0), fset(0, 1), fset(0, 1, 2)]))


def test_family_rejects_duplicates():
    with pytest.raises(ValueError):
        FiniteFamily([fset(1), fset(1)])
    assert len(FiniteFamily.dedup([fset(1), fset(1), fset(2)])) == 2


def test_canonical_order_is_size_then_elements():
    fam = FiniteFamily([fset(0, 1, 2), fset(5), fset(0, 3), fset(0, 2)])
    assert [str(s) for s in fam.canonical()] == ["{5}", "{0,2}", "{0,3}", "{0,1,2}"]


def test_sets_format_round_trip_and_errors():
    text = "# a comment\n{0,1}\n\n{2, 3}\n{}\n"
    fam = parse_sets(text)
    assert [str(s) for s in fam] == ["{0,1}", "{2,3}", "{}"]
    assert parse_sets(format_sets(fam)) == fam
    assert parse_set("{ 4 ,1}") == fset(1, 4)
    with pytest.raises(SpecSyntaxError):
        parse_sets("{0,1}\n{0,x}\n")
    with pytest.raises(SpecSyntaxError):
        parse_sets("{0}\n{0}\n")


@given(families)
def test_is_sunflower_matches_all_pairs_oracle(sets):
    fam = FiniteFamily(FiniteSet(s) for s in sets)
    check = is_sunflower(fam)
    assert check.verdict == all_pairs_sunflower(sets)
    if check.verdict and len(sets) >= 2:
        assert check.core.frozen == sets[0] & sets[1]
    if not check.verdict:
        (i, j), (k, l) = check.violation
        assert sets[i] & sets[j] != sets[k] & sets[l]


@given(families, st.data())
def test_subfamilies_of_sunflowers_are_sunflowers(sets, data):
    fam = FiniteFamily(FiniteSet(s) for s in sets)
    if not is_sunflower(fam):
        return
    keep = data.draw(st.lists(st.booleans(), min_size=len(sets), max_size=len(sets)))
    sub = FiniteFamily(s for s, k in zip(fam, keep) if k)
    assert is_sunflower(sub)
    core = core_of(fam)
    if core is not None:
        assert all(core <= p for p in fam)


@given(small_sets, small_sets)
def test_set_operations_match_frozenset(a, b):
    p, q = FiniteSet(a), FiniteSet(b)
    assert (p & q).frozen == a & b
    assert (p | q).frozen == a | b
    assert (p - q).frozen == a - b
    assert (p <= q) == (a <= b)
    assert p.isdisjoint(q) == a.isdisjoint(b)
