import pytest

import oracles
from sunflower.errors import PoolInfinite, PoolTooLarge
from sunflower.familyspec import Explicit, parse_spec
from sunflower.setcore import FiniteFamily, fset, initial_segment, is_sunflower
from sunflower.sunflowertree import children, tree_level, tree_stats

IS = parse_spec("initial_segments")
GB = parse_spec("graded_blocks")


def fam(*sets):
    return FiniteFamily(sets)


def test_initial_segments_level_two():
    level = tree_level(IS, 1, 2)
    assert list(level.nodes) == [
        fam(initial_segment(1)),
        fam(initial_segment(1), initial_segment(2)),
        fam(initial_segment(1), initial_segment(3)),
    ]


def test_pool_errors():
    with pytest.raises(PoolInfinite):
        tree_level(parse_spec("matching(2)"), 2, 0)
    with pytest.raises(PoolTooLarge):
        tree_level(GB, 3, 5, guard=10)


def test_explicit_window_follows_the_definition():
    # {0,1,2} alone has min size 3 > n, so it is not a node of T_1
    level = tree_level(Explicit(FiniteFamily([fset(0), fset(0, 1, 2)])), 1, 2)
    assert list(level.nodes) == [fam(fset(0)), fam(fset(0), fset(0, 1, 2))]


def test_stats_examples():
    stats = tree_stats(IS, 1, 4)
    assert stats.per_level_counts == [1, 2, 3, 4, 5]
    assert stats.longest_strict_chain == 2
    assert stats.chain_witness == [fam(initial_segment(1)), fam(initial_segment(1), initial_segment(2))]


def test_graded_blocks_growth_against_formula():
    stats = tree_stats(GB, 3, 6, guard=64)
    assert stats.per_level_counts == [oracles.graded_nodes(k) for k in range(7)]
    assert all(a < b for a, b in zip(stats.cumulative_distinct, stats.cumulative_distinct[1:]))
    assert stats.longest_strict_chain == 3


@pytest.mark.parametrize("k", range(4))
def test_graded_blocks_levels_match_brute_force(k):
    pool = oracles.graded_blocks(k + 2)
    expected = set(oracles.brute_tree_level(pool, 3, k))
    got = {frozenset(s.frozen for s in node) for node in tree_level(GB, 3, k, guard=64).nodes}
    assert got == expected


def test_children_examples():
    assert children(IS, 1, 0, fam(initial_segment(1))) == [
        fam(initial_segment(1)), fam(initial_segment(1), initial_segment(2))]
    pair = fam(initial_segment(1), initial_segment(2))
    assert children(IS, 1, 1, pair) == [pair]
    single = Explicit(FiniteFamily([fset(0)]))
    assert children(single, 1, 0, fam(fset(0))) == [fam(fset(0))]
    with pytest.raises(ValueError):
        children(IS, 1, 0, fam(initial_segment(3)))


@pytest.mark.parametrize("spec, n, depth", [(IS, 1, 5), (IS, 2, 4), (GB, 3, 3), (GB, 2, 3)])
def test_tree_invariants(spec, n, depth):
    levels = [tree_level(spec, n, k, guard=64) for k in range(depth + 1)]
    for k, level in enumerate(levels):
        assert len(set(level.nodes)) == len(level.nodes)
        for node in level.nodes:
            assert is_sunflower(node)
            assert min(map(len, node)) <= n and max(map(len, node)) <= n + k
        if k + 1 < len(levels):
            assert set(level.nodes) <= set(levels[k + 1].nodes)
            # each level-(k+1) node is the child of exactly one level-k node
            owners = {}
            for parent in level.nodes:
                for child in children(spec, n, k, parent, guard=64):
                    assert child not in owners
                    owners[child] = parent
            assert set(owners) == set(levels[k + 1].nodes)
    stats = tree_stats(spec, n, depth, guard=64)
    chain = stats.chain_witness
    assert all(set(a) < set(b) for a, b in zip(chain, chain[1:]))
    assert is_sunflower(chain[-1])
