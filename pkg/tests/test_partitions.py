from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hookbias.partitions import (
    Partition,
    PartitionClass,
    a_star_brute,
    b_star_brute,
    cell_stats,
    conjugate,
    enumerate_class,
    hook_tally,
    n_t,
    principal_hooks,
)

SC, DO, ALL = PartitionClass.SELF_CONJUGATE, PartitionClass.DISTINCT_ODD, PartitionClass.ALL


def parts(ps):
    return [p.parts for p in ps]


def test_enumerate_examples():
    assert parts(enumerate_class(SC, 0)) == [()]
    assert parts(enumerate_class(SC, 8)) == [(4, 2, 1, 1), (3, 3, 2)]
    assert parts(enumerate_class(DO, 8)) == [(7, 1), (5, 3)]


def test_conjugate_examples():
    assert conjugate((3, 1)).parts == (2, 1, 1)
    assert conjugate((2, 2)).parts == (2, 2)
    assert conjugate(()).parts == ()


def test_hooks_of_5_3_2():
    hooks = [c.hook for c in cell_stats((5, 3, 2))]
    assert hooks == [7, 6, 4, 2, 1, 4, 3, 1, 2, 1]
    assert n_t((5, 3, 2), 5) == 0


def test_single_cell():
    (c,) = cell_stats((1,))
    assert (c.arm, c.leg, c.hook) == (0, 0, 1)


def test_small_hook_counts():
    assert sorted(c.hook for c in cell_stats((3, 1))) == [1, 1, 2, 4]
    assert n_t((3, 1), 2) == 1
    assert n_t((2, 2), 2) == 2


@pytest.mark.parametrize(
    "fn,t,n,want",
    [
        (a_star_brute, 2, 4, 2),
        (a_star_brute, 2, 3, 0),
        (a_star_brute, 1, 1, 1),
        (b_star_brute, 2, 4, 1),
        (b_star_brute, 1, 1, 1),
        (b_star_brute, 4, 4, 1),
    ],
)
def test_star_examples(fn, t, n, want):
    assert fn(t, n) == want


def test_rejects_bad_parts():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


@pytest.mark.parametrize("n", range(41))
def test_bijection_cardinality(n):
    assert len(enumerate_class(SC, n)) == len(enumerate_class(DO, n))


@pytest.mark.parametrize("n", range(31))
def test_bijection_matches_filter(n):
    assert enumerate_class(SC, n) == enumerate_class(SC, n, method="filter")


def test_principal_hooks_round_trip():
    for lam in enumerate_class(DO, 30):
        sc = enumerate_class(SC, 30)
        assert any(principal_hooks(mu) == lam.parts for mu in sc)


@pytest.mark.parametrize("n", range(1, 41))
def test_hook_totals_count_every_cell(n):
    # each cell carries exactly one hook, so the plain sum over t is n per partition
    sc, do = len(enumerate_class(SC, n)), len(enumerate_class(DO, n))
    assert sum(a_star_brute(t, n) for t in range(1, 2 * n)) == n * sc
    assert sum(b_star_brute(t, n) for t in range(1, 2 * n)) == n * do


def test_hook_weighted_sum_is_not_n():
    # the t-weighted sum overcounts: (2, 1) has hooks {3, 1, 1}
    assert sum(t * k for t, k in hook_tally((2, 1)).items()) == 5


def test_empty_partition_has_no_hooks():
    assert hook_tally(()) == Counter()
    assert a_star_brute(1, 0) == 0


@pytest.mark.parametrize("n", range(0, 31, 5))
def test_conjugation_involution(n):
    for lam in enumerate_class(ALL, n):
        assert conjugate(conjugate(lam)) == lam


partitions_st = st.lists(st.integers(1, 12), max_size=10).map(lambda xs: Partition(tuple(sorted(xs, reverse=True))))


@given(partitions_st)
@settings(max_examples=200)
def test_cell_stats_consistency(lam):
    stats = cell_stats(lam)
    assert len(stats) == lam.size
    for c in stats:
        assert c.hook == c.arm + c.leg + 1
        assert c.coarm == c.col - 1 and c.coleg == c.row - 1
    assert sum(hook_tally(lam).values()) == lam.size


@given(partitions_st)
@settings(max_examples=200)
def test_conjugate_preserves_hook_multiset(lam):
    assert hook_tally(lam) == hook_tally(conjugate(lam))


@given(st.integers(0, 40))
def test_self_conjugate_members(n):
    for lam in enumerate_class(SC, n):
        assert conjugate(lam) == lam
        # column-major count of t-hooks agrees with row-major
        by_col = Counter(c.hook for c in sorted(cell_stats(lam), key=lambda c: (c.col, c.row)))
        assert by_col == hook_tally(lam)
    for lam in enumerate_class(DO, n):
        assert all(p % 2 for p in lam.parts) and len(set(lam.parts)) == len(lam.parts)
