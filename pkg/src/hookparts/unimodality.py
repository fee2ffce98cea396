"""Exact checks of strong unimodality, the non-log-concavity defect, the
sign pattern of Delta and the two ratio lemmas.

Every comparison here is between Python integers. Ratios of Delta values
are compared by cross-multiplying after confirming both values negative.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .sequences import DeltaGrid, TriangleTable, VerificationReport, a_table


@dataclass
class UnimodalityReport:
    n: int
    mode_expected: int
    strictly_increasing_prefix_ok: bool
    strictly_decreasing_suffix_ok: bool
    argmax_indices: list[int] = field(default_factory=list)
    tail_ones_ok: bool = True

    @property
    def ok(self) -> bool:
        return (
            self.strictly_increasing_prefix_ok
            and self.strictly_decreasing_suffix_ok
            and self.argmax_indices == [self.mode_expected]
        )


def mode(n: int) -> int:
    if n < 6:
        raise ValueError(f"strong unimodality needs n >= 6, got {n}")
    return (n - 1) // 4


def check_strong_unimodality(n: int, table: TriangleTable | None = None) -> UnimodalityReport:
    """Scan A(n, 0..n-2): strictly up to floor((n-1)/4), strictly down after."""
    star = mode(n)
    table = table if table is not None and table.n_max >= n else a_table(n)
    chain = [table(n, m) for m in range(n - 1)]
    top = max(chain)
    return UnimodalityReport(
        n=n,
        mode_expected=star,
        strictly_increasing_prefix_ok=all(chain[m] < chain[m + 1] for m in range(star)),
        strictly_decreasing_suffix_ok=all(
            chain[m] > chain[m + 1] for m in range(star, len(chain) - 1)
        ),
        argmax_indices=[m for m, v in enumerate(chain) if v == top],
        tail_ones_ok=table(n, n - 2) == 1 and table(n, n - 1) == 1,
    )


def verify_unimodality(n_max: int, n_min: int = 6) -> VerificationReport:
    table = a_table(n_max)
    report = VerificationReport("strong unimodality with mode floor((n-1)/4)")
    for n in range(max(n_min, 6), n_max + 1):
        r = check_strong_unimodality(n, table)
        report.record(r.ok and r.tail_ones_ok, (n, r))
    report.detail = f"n in [{max(n_min, 6)}, {n_max}]"
    return report


def log_concavity_defect(n: int, table: TriangleTable | None = None) -> int:
    """A(n, n-2)^2 - A(n, n-3) A(n, n-1); equals 2 - n."""
    if n < 3:
        raise ValueError(f"defect is defined for n >= 3, got {n}")
    table = table if table is not None and table.n_max >= n else a_table(n)
    return table(n, n - 2) ** 2 - table(n, n - 3) * table(n, n - 1)


def verify_log_concavity_defect(n_max: int) -> VerificationReport:
    table = a_table(n_max)
    report = VerificationReport("A(n,n-2)^2 - A(n,n-3)A(n,n-1) = 2-n")
    for n in range(3, n_max + 1):
        got = log_concavity_defect(n, table)
        report.record(got == 2 - n, (n, got))
    return report


def _negative_ratio_below(num: int, den: int, p: int, q: int) -> bool:
    # num/den < p/q with num, den < 0 and p, q > 0
    return (-num) * q < p * (-den)


def check_ratio_bounds(m: int, grid: DeltaGrid | None = None) -> VerificationReport:
    """1/m < Delta(n-1, m)/Delta(n, m) < 7/9 for every n in [m+4, 4m-2]."""
    if m < 5:
        raise ValueError(f"ratio lemma needs m >= 5, got {m}")
    grid = grid or DeltaGrid(4 * m - 2)
    report = VerificationReport(f"1/m < ratio < 7/9 at m={m}")
    for n in range(m + 4, 4 * m - 1):
        num, den = grid.delta(n - 1, m), grid.delta(n, m)
        if num >= 0 or den >= 0:
            report.record(False, (n, m, num, den, "sign"))
            continue
        above_lower = (-num) * m > -den
        below_upper = _negative_ratio_below(num, den, 7, 9)
        report.record(above_lower and below_upper, (n, m, num, den))
    return report


def check_upper_10_9(m: int, grid: DeltaGrid | None = None) -> bool:
    """Delta(4m-2, m)/Delta(4m-1, m) < 10/9."""
    if m < 3:
        raise ValueError(f"bound needs m >= 3, got {m}")
    d = grid.delta if grid is not None else DeltaGrid(4 * m - 1).delta
    num, den = d(4 * m - 2, m), d(4 * m - 1, m)
    if num >= 0 or den >= 0:
        return False
    return _negative_ratio_below(num, den, 10, 9)


def verify_ratio_lemmas(m_max: int) -> VerificationReport:
    grid = DeltaGrid(4 * m_max)
    report = VerificationReport("ratio lemmas 7/9 (m>=5) and 10/9 (m>=3)")
    for m in range(5, m_max + 1):
        sub = check_ratio_bounds(m, grid)
        report.checked += sub.checked
        report.violations.extend(sub.violations)
    for m in range(3, m_max + 1):
        report.record(check_upper_10_9(m, grid), ("10/9", m))
    report.detail = f"m <= {m_max}"
    return report


def check_sign_pattern(n_max: int) -> VerificationReport:
    """Delta < 0 on m+2 <= n <= 4m, Delta > 0 for n >= 4m+1, increasing in n there."""
    if n_max < 6:
        raise ValueError(f"n_max must be at least 6, got {n_max}")
    grid = DeltaGrid(n_max)
    report = VerificationReport("sign pattern of Delta")
    for n in range(6, n_max + 1):
        for m in range(n):
            d = grid.delta(n, m)
            if m + 2 <= n <= 4 * m:
                report.record(d < 0, ("negative", n, m, d))
            elif n >= 4 * m + 1:
                report.record(d > 0, ("positive", n, m, d))
            if n - 1 >= max(6, 4 * m + 1):
                prev = grid.delta(n - 1, m)
                report.record(d > prev, ("increasing", n, m, prev, d))
    return report
