"""Brute-force enumeration of partitions by largest hook length.

This is the independent ground truth for the A(n, m) triangle: nothing here
uses a recurrence or a binomial sum, only explicit listing of partitions.
"""
from __future__ import annotations

from typing import Iterator, Sequence

from .sequences import TriangleTable

DEFAULT_ENUMERATION_CAP = 24


class EnumerationTooLarge(ValueError):
    pass


class Partition(tuple):
    """A weakly decreasing tuple of positive parts."""

    __slots__ = ()

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> "Partition":
        parts = tuple(parts)
        if not parts:
            raise ValueError("a partition in H_n has at least one part")
        if any(not isinstance(p, int) or p < 1 for p in parts):
            raise ValueError(f"parts must be positive integers: {parts!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts!r}")
        return cls(parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def hook(self) -> int:
        """Hook length of the top-left cell, lambda_1 + len - 1."""
        return self[0] + len(self) - 1

    def __repr__(self) -> str:
        return f"Partition{tuple(self)!r}"


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise EnumerationTooLarge(
            f"enumeration too large: n={n} exceeds the enumeration cap {cap} "
            f"(|H_n| = 2^(n-1)); pass a larger cap explicitly"
        )


def _tails(length: int, bound: int) -> Iterator[tuple[int, ...]]:
    # weakly decreasing tuples of the given length with entries in [1, bound]
    if length == 0:
        yield ()
        return
    for head in range(bound, 0, -1):
        for rest in _tails(length - 1, head):
            yield (head,) + rest


def iter_hook(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Partition]:
    """Yield every partition with largest hook length ``n``.

    Order: first part from 1 up to n; for each first part the remaining
    ``n - lambda_1`` parts are listed largest-first.
    """
    if n < 1:
        raise ValueError(f"hook length must be positive, got {n}")
    _check_cap(n, cap)
    for first in range(1, n + 1):
        for tail in _tails(n - first, first):
            yield Partition((first,) + tail)


def enumerate_hook(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[Partition]:
    return list(iter_hook(n, cap))


def count_even_parts(p: Sequence[int]) -> int:
    return sum(1 for part in p if part % 2 == 0)


def count_equal_adjacent_pairs(p: Sequence[int]) -> int:
    return sum(1 for a, b in zip(p, p[1:]) if a == b)


def oracle_tables(
    n_max: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[TriangleTable, TriangleTable]:
    """Tabulate both statistics over H_1..H_{n_max} by enumeration.

    Returns ``(by_even_parts, by_equal_adjacent_pairs)``.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    _check_cap(n_max, cap)
    even_rows: list[list[int]] = []
    pair_rows: list[list[int]] = []
    for n in range(1, n_max + 1):
        even = [0] * n
        pairs = [0] * n
        for p in iter_hook(n, cap):
            even[count_even_parts(p)] += 1
            pairs[count_equal_adjacent_pairs(p)] += 1
        even_rows.append(even)
        pair_rows.append(pairs)
    return TriangleTable(even_rows), TriangleTable(pair_rows)
