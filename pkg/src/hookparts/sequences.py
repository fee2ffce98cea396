"""Exact values of A(n, m), its first difference in m, and the two
Zeilberger certificates that relate them.

Convention throughout: A(n, m) = 0 whenever n <= 0, m < 0 or m > n - 1.
With that convention the five-term recurrence holds verbatim for n >= 2 and
agrees with the binomial sum for every pair of integers.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Sequence


class TriangleTable:
    """Rows n = 1..n_max, row n holding the n exact values at m = 0..n-1."""

    def __init__(self, rows: Sequence[Sequence[int]]):
        self.rows: tuple[tuple[int, ...], ...] = tuple(tuple(r) for r in rows)
        for n, row in enumerate(self.rows, start=1):
            if len(row) != n:
                raise ValueError(f"row {n} has {len(row)} entries, expected {n}")

    @property
    def n_max(self) -> int:
        return len(self.rows)

    def __call__(self, n: int, m: int) -> int:
        if n < 1 or m < 0 or m > n - 1:
            return 0
        if n > self.n_max:
            raise IndexError(f"table only covers n <= {self.n_max}, asked for n={n}")
        return self.rows[n - 1][m]

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n - 1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TriangleTable):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self) -> str:
        return f"TriangleTable(n_max={self.n_max})"

    def to_csv(self) -> str:
        """Header ``n\\m,0,1,...``; one ragged row per n, exact decimals."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n\\m", *range(self.n_max)])
        for n, row in enumerate(self.rows, start=1):
            writer.writerow([n, *row])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "TriangleTable":
        reader = csv.reader(io.StringIO(text))
        next(reader)
        rows = []
        for n, rec in enumerate(reader, start=1):
            if int(rec[0]) != n:
                raise ValueError(f"expected row {n}, found {rec[0]}")
            rows.append([int(x) for x in rec[1:]])
        return cls(rows)


def a_table(n_max: int) -> TriangleTable:
    """Build A(n, m) for 1 <= n <= n_max from the five-term recurrence."""
    if n_max < 1:
        raise ValueError(f"n_max must be positive, got {n_max}")
    return TriangleTable(_a_rows(n_max))


@lru_cache(maxsize=8)
def _a_rows(n_max: int) -> tuple[tuple[int, ...], ...]:
    rows: list[list[int]] = [[1]]

    def get(n: int, m: int) -> int:
        if n < 1 or m < 0 or m > n - 1:
            return 0
        return rows[n - 1][m]

    for n in range(2, n_max + 1):
        rows.append(
            [
                get(n - 1, m) + get(n - 1, m - 1) + get(n - 2, m) - get(n - 2, m - 1)
                for m in range(n)
            ]
        )
    return tuple(tuple(r) for r in rows)


def _binom(a: int, b: int) -> int:
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def a_closed(n: int, m: int) -> int:
    """A(n, m) = sum_k C(k, m) C(n-1-k, k-m), for any integers n, m."""
    if m < 0:
        return 0
    # C(n-1-k, k-m) vanishes once 2k - m > n - 1
    return sum(_binom(k, m) * _binom(n - 1 - k, k - m) for k in range(m, max(m, n) + 1))


def delta(n: int, m: int) -> int:
    return a_closed(n, m) - a_closed(n, m - 1)


def g_value(n: int, m: int) -> int:
    return delta(n, m) + delta(n - 1, m)


_BOUNDARY: dict[int, Callable[[int], int]] = {
    1: lambda m: 0,
    2: lambda m: -m,
    3: lambda m: -(m - 1),
    4: lambda m: -((m + 4) * (m - 1) // 2),
    5: lambda m: -(m * m + m - 4),
}


def boundary_delta(m: int, offset: int) -> int:
    """Closed form of Delta(m + offset, m) for offset 1..5 and m >= 1."""
    if offset not in _BOUNDARY:
        raise ValueError(f"offset must be one of 1..5, got {offset}")
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    # (m+4)(m-1) is always even, so the floor division above is exact
    return _BOUNDARY[offset](m)


class DeltaGrid:
    """Memoized Delta and G lookups backed by one recurrence table."""

    def __init__(self, n_max: int):
        self.table = a_table(max(n_max, 1))

    def a(self, n: int, m: int) -> int:
        return self.table(n, m)

    def delta(self, n: int, m: int) -> int:
        return self.table(n, m) - self.table(n, m - 1)

    def g(self, n: int, m: int) -> int:
        return self.delta(n, m) + self.delta(n - 1, m)


# -- certificates -----------------------------------------------------------


@dataclass(frozen=True)
class RecurrenceCertificate:
    """Polynomial coefficients c_j(n, m) of sum_j c_j(n, m) S(n + sign*j, m) = 0."""

    name: str
    coeffs: tuple[Callable[[int, int], int], ...]
    step: int  # -1 for S(n - j), +1 for S(n + j)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, seq: Callable[[int, int], int], n: int, m: int) -> int:
        return sum(c(n, m) * seq(n + self.step * j, m) for j, c in enumerate(self.coeffs))


DELTA_CERTIFICATE = RecurrenceCertificate(
    name="delta",
    coeffs=(
        lambda n, m: -(n - m) * (n - 4 * m - 1),
        lambda n, m: 2 * (n - m - 1) * (n - 4 * m),
        lambda n, m: 2 * m * (n - 4 * m - 1),
        lambda n, m: -(n - 1) * (n - 4 * m),
    ),
    step=-1,
)

G_CERTIFICATE = RecurrenceCertificate(
    name="G",
    coeffs=(
        lambda n, m: (n + 1) * (2 * n * n - 13 * m * n + 10 * n + 20 * m * m - 32 * m + 12),
        lambda n, m: -m * (4 * n * n - 26 * m * n + 21 * n + 40 * m * m - 74 * m + 29),
        lambda n, m: (
            -4 * n**3
            + 30 * m * n * n
            - 24 * n * n
            - 66 * m * m * n
            + 119 * m * n
            - 44 * n
            + 40 * m**3
            - 140 * m * m
            + 109 * m
            - 24
        ),
        lambda n, m: (n - m + 3) * (2 * n * n - 13 * m * n + 6 * n + 20 * m * m - 19 * m + 4),
    ),
    step=+1,
)


@dataclass
class VerificationReport:
    """Outcome of checking one claim on a finite set of points.

    A violation is recorded with enough context to reproduce it by hand; an
    empty violation list means the claim held everywhere it was checked.
    """

    claim: str
    checked: int = 0
    violations: list[tuple] = field(default_factory=list)
    detail: str = ""

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, ok: bool, witness: tuple) -> None:
        self.checked += 1
        if not ok:
            self.violations.append(witness)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        text = f"{status} {self.claim}: {self.checked} checked, {len(self.violations)} violations"
        if self.detail:
            text += f"; {self.detail}"
        if self.violations:
            text += f"; first {self.violations[0]}"
        return text


def _span(r: Iterable[int] | int) -> range:
    if isinstance(r, int):
        return range(r, r + 1)
    return r if isinstance(r, range) else range(min(r), max(r) + 1)


def verify_delta_certificate(n_range, m_range, grid: DeltaGrid | None = None) -> VerificationReport:
    """Check the 4-term Delta recurrence exactly at every (n, m) in the grid."""
    ns, ms = _span(n_range), _span(m_range)
    grid = grid or DeltaGrid(max(ns) if len(ns) else 1)
    report = VerificationReport("delta certificate")
    for n in ns:
        for m in ms:
            terms = tuple(
                c(n, m) * grid.delta(n - j, m) for j, c in enumerate(DELTA_CERTIFICATE.coeffs)
            )
            report.record(sum(terms) == 0, (n, m, terms))
    return report


def degenerate_identity(m: int, grid: DeltaGrid | None = None) -> bool:
    """3 Delta(4m, m) == 2 Delta(4m-2, m)."""
    d = grid.delta if grid is not None else delta
    return 3 * d(4 * m, m) == 2 * d(4 * m - 2, m)


def g_specialized(m: int, grid: DeltaGrid | None = None) -> tuple[int, int]:
    """Both sides of (3m+1) G(4m+1) = -(12m-7) G(4m) + (2m-3) G(4m-1) + (8m-2) G(4m-2)."""
    g = grid.g if grid is not None else g_value
    lhs = (3 * m + 1) * g(4 * m + 1, m)
    rhs = (
        -(12 * m - 7) * g(4 * m, m)
        + (2 * m - 3) * g(4 * m - 1, m)
        + (8 * m - 2) * g(4 * m - 2, m)
    )
    return lhs, rhs


def verify_g_certificate(n_range, m_range, grid: DeltaGrid | None = None) -> VerificationReport:
    """Check the general l_j identity on the grid and the n = 4m-2 rearrangement for each m."""
    ns, ms = _span(n_range), _span(m_range)
    top = max(max(ns) + 3 if len(ns) else 1, 4 * max(ms) + 1 if len(ms) else 1)
    grid = grid or DeltaGrid(top)
    report = VerificationReport("G certificate")
    for n in ns:
        for m in ms:
            value = G_CERTIFICATE.evaluate(grid.g, n, m)
            report.record(value == 0, ("general", n, m, value))
    for m in ms:
        if m < 1:
            continue
        lhs, rhs = g_specialized(m, grid)
        report.record(lhs == rhs, ("specialized", m, lhs, rhs))
    return report


def reduction_4m2(m: int, grid: DeltaGrid | None = None) -> tuple[int, int]:
    """Both sides of 4(3m+1) D(4m+1) + 2m D(4m) = 2(4m+1) D(4m-1) + (3m+2) D(4m+2)."""
    d = grid.delta if grid is not None else delta
    lhs = 4 * (3 * m + 1) * d(4 * m + 1, m) + 2 * m * d(4 * m, m)
    rhs = 2 * (4 * m + 1) * d(4 * m - 1, m) + (3 * m + 2) * d(4 * m + 2, m)
    return lhs, rhs


def verify_4m2_reduction(m_range, grid: DeltaGrid | None = None) -> VerificationReport:
    ms = _span(m_range)
    grid = grid or DeltaGrid(4 * max(ms) + 2)
    report = VerificationReport("n=4m+2 reduction")
    for m in ms:
        lhs, rhs = reduction_4m2(m, grid)
        report.record(lhs == rhs, (m, lhs, rhs))
    return report


def verify_boundary_formulas(m_range, grid: DeltaGrid | None = None) -> VerificationReport:
    ms = _span(m_range)
    grid = grid or DeltaGrid(max(ms) + 5)
    report = VerificationReport("boundary formulas Delta(m+1..m+5, m)")
    for m in ms:
        for offset in range(1, 6):
            got, want = grid.delta(m + offset, m), boundary_delta(m, offset)
            report.record(got == want, (m, offset, got, want))
    return report


def verify_degenerate_identity(m_range, grid: DeltaGrid | None = None) -> VerificationReport:
    ms = _span(m_range)
    grid = grid or DeltaGrid(4 * max(ms))
    report = VerificationReport("3 Delta(4m,m) = 2 Delta(4m-2,m)")
    for m in ms:
        report.record(degenerate_identity(m, grid), (m, grid.delta(4 * m, m), grid.delta(4 * m - 2, m)))
    return report


def delta_table(n_max: int) -> TriangleTable:
    """Delta(n, m) for 1 <= n <= n_max, 0 <= m <= n-1."""
    grid = DeltaGrid(n_max)
    return TriangleTable([[grid.delta(n, m) for m in range(n)] for n in range(1, n_max + 1)])
