from collections import Counter

import pytest
from hypothesis import given, strategies as st

from hookparts.partitions import (
    EnumerationTooLarge,
    Partition,
    count_equal_adjacent_pairs,
    count_even_parts,
    enumerate_hook,
    oracle_tables,
)
from hookparts.sequences import a_table


def test_hook_one():
    assert enumerate_hook(1) == [Partition((1,))]


def test_hook_three_listing():
    got = enumerate_hook(3)
    assert set(got) == {(3,), (2, 1), (2, 2), (1, 1, 1)}
    assert len(got) == 4


def test_enumeration_order_is_by_first_part():
    firsts = [p[0] for p in enumerate_hook(6)]
    assert firsts == sorted(firsts)


@pytest.mark.parametrize("n", range(1, 13))
def test_size_is_power_of_two(n):
    parts = enumerate_hook(n)
    assert len(parts) == 2 ** (n - 1)
    assert len(set(parts)) == len(parts)
    assert all(p.hook == n for p in parts)


def test_cap_error_names_cap():
    with pytest.raises(EnumerationTooLarge, match="cap 10"):
        enumerate_hook(11, cap=10)
    with pytest.raises(EnumerationTooLarge):
        oracle_tables(25)


@pytest.mark.parametrize("bad", [[], [0], [1, 2], [2, -1]])
def test_partition_validation(bad):
    with pytest.raises(ValueError):
        Partition.from_parts(bad)


@pytest.mark.parametrize(
    "parts, even, pairs",
    [((2, 2), 2, 1), ((3,), 0, 0), ((2, 1), 1, 0), ((1, 1, 1), 0, 2)],
)
def test_statistics(parts, even, pairs):
    assert count_even_parts(parts) == even
    assert count_equal_adjacent_pairs(parts) == pairs


def test_oracle_rows_three_and_five():
    even, pairs = oracle_tables(5)
    assert even.row(3) == (2, 1, 1)
    assert pairs.row(3) == (2, 1, 1)
    assert even.row(5) == (5, 5, 4, 1, 1)


def test_oracle_matches_recurrence():
    even, pairs = oracle_tables(14)
    assert even == pairs == a_table(14)
    for n in range(1, 15):
        assert sum(even.row(n)) == 2 ** (n - 1)


@given(st.integers(1, 10), st.data())
def test_every_hook_partition_is_found(n, data):
    # draw a random partition of hook n: first part, then a tail bounded by it
    first = data.draw(st.integers(1, n))
    tail = sorted(data.draw(st.lists(st.integers(1, first), min_size=n - first, max_size=n - first)), reverse=True)
    assert Partition((first, *tail)) in set(enumerate_hook(n))


def test_even_and_pair_distributions_agree_per_row():
    for n in range(1, 11):
        ps = enumerate_hook(n)
        assert Counter(map(count_even_parts, ps)) == Counter(map(count_equal_adjacent_pairs, ps))
