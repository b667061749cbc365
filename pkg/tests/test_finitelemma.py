import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import all_pairs_sunflower, brute_max_sunflower, canonical
from sunflower.errors import NotUniform, TooLarge
from sunflower.finitelemma import er_bound, erdos_rado_find, max_sunflower_exact, maximal_disjoint
from sunflower.setcore import FiniteFamily, FiniteSet, fset, is_sunflower

TRIANGLES = FiniteFamily([fset(0, 1), fset(1, 2), fset(0, 2), fset(3, 4), fset(4, 5), fset(3, 5)])


@pytest.mark.parametrize("k, t, value", [(2, 3, 8), (1, 3, 2), (3, 2, 6)])
def test_er_bound_examples(k, t, value):
    assert er_bound(k, t) == value


def test_er_bound_overflow():
    with pytest.raises(OverflowError):
        er_bound(30, 10)


def test_exact_examples():
    assert max_sunflower_exact(TRIANGLES).size == 2
    disjoint = FiniteFamily([fset(0, 1), fset(2, 3), fset(4, 5)])
    result = max_sunflower_exact(disjoint)
    assert result.size == 3 and result.witness == disjoint and result.exhaustive
    assert max_sunflower_exact(FiniteFamily([fset(0)])).size == 1
    assert max_sunflower_exact(FiniteFamily()).size == 0


def test_exact_guard():
    big = FiniteFamily(fset(i) for i in range(21))
    with pytest.raises(TooLarge):
        max_sunflower_exact(big)
    assert max_sunflower_exact(big, limit=21).size == 21


def test_maximal_disjoint_examples():
    assert maximal_disjoint(FiniteFamily([fset(0, 1), fset(1, 2), fset(2, 3)])) == FiniteFamily([fset(0, 1), fset(2, 3)])
    assert len(maximal_disjoint(FiniteFamily([fset(0), fset(1), fset(2)]))) == 3
    assert maximal_disjoint(FiniteFamily([fset(0, 1), fset(0, 2)])) == FiniteFamily([fset(0, 1)])


def test_erdos_rado_examples():
    assert erdos_rado_find(TRIANGLES, 3) is None
    found = erdos_rado_find(FiniteFamily([fset(0), fset(1), fset(2)]), 3)
    assert found.size == 3
    with pytest.raises(NotUniform):
        erdos_rado_find(FiniteFamily([fset(0), fset(1, 2)]), 2)


families = st.lists(st.frozensets(st.integers(0, 7), min_size=1, max_size=4), max_size=9, unique=True)


@settings(deadline=None)
@given(families)
def test_exact_matches_brute_force(sets):
    result = max_sunflower_exact(FiniteFamily(FiniteSet(s) for s in sets))
    size, idx = brute_max_sunflower(sets)
    assert result.size == size
    members = canonical(sets)
    assert [s.frozen for s in result.witness] == [members[i] for i in idx]


def test_bound_guarantee_randomized():
    rng = random.Random(11)
    for _ in range(300):
        k, t = rng.randint(1, 3), rng.randint(2, 4)
        size = er_bound(k, t) + 1
        universe = next(u for u in itertools.count(k) if len(list(itertools.combinations(range(u), k))) >= size + 5)
        pool = list(itertools.combinations(range(universe), k))
        sets = [frozenset(c) for c in rng.sample(pool, size)]
        found = erdos_rado_find(FiniteFamily(FiniteSet(s) for s in sets), t)
        assert found is not None and found.size >= t
        assert all_pairs_sunflower([s.frozen for s in found.witness])
        assert all(s.frozen in sets for s in found.witness)


@settings(deadline=None)
@given(st.integers(1, 3), st.integers(2, 3), st.data())
def test_erdos_rado_soundness(k, t, data):
    pool = [frozenset(c) for c in itertools.combinations(range(6), k)]
    sets = data.draw(st.lists(st.sampled_from(pool), max_size=12, unique=True))
    fam = FiniteFamily(FiniteSet(s) for s in sets)
    found = erdos_rado_find(fam, t)
    if found is not None:
        assert is_sunflower(found.witness) and found.size >= t
        assert max_sunflower_exact(fam).size >= t
