"""The ten exit criteria, each runnable on its own and timed."""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .export import golden_csv
from .limits import ExactComplex, wz_limits
from .partitions import oracle_tables
from .polyseq import mobius_chain, w_lift
from .rootgeom import (
    GEOMETRY_TOL,
    RESIDUAL_TOL,
    arc_density,
    certify_circle,
    certify_interlacing,
    certify_negative_simple,
    f_roots,
    lift_roots,
)
from .sequences import (
    DeltaGrid,
    a_closed,
    a_table,
    delta_table,
    verify_4m2_reduction,
    verify_boundary_formulas,
    verify_degenerate_identity,
    verify_delta_certificate,
    verify_g_certificate,
)
from .unimodality import verify_log_concavity_defect, verify_ratio_lemmas, verify_unimodality

TABLE_N = 15
ORACLE_N = 20
UNIMODAL_N = 300
DELTA_CERT_N = 200
G_CERT_M = 100
IDENTITY_M = 200
RATIO_M = 100
LOGCONCAVE_N = 100
CIRCLE_N = 60
LIFT_EXACT_N = 200
LIFT_NUMERIC_N = 60
CHAIN_N = 40
DENSITY_N = 200


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    elapsed: float
    time_limit: float | None = None

    @property
    def ok(self) -> bool:
        in_time = self.time_limit is None or self.elapsed < self.time_limit
        return self.passed and in_time

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        budget = f" (limit {self.time_limit:g}s)" if self.time_limit else ""
        return f"{status} [{self.number}] {self.name}: {self.detail}; {self.elapsed:.2f}s{budget}"


def tables() -> tuple[bool, str]:
    a_ok = a_table(TABLE_N).to_csv() == golden_csv("table1.csv")
    d_ok = delta_table(TABLE_N).to_csv() == golden_csv("table2.csv")
    return a_ok and d_ok, f"A table byte-exact={a_ok}, Delta table byte-exact={d_ok}"


def cross_validation() -> tuple[bool, str]:
    even, pairs = oracle_tables(ORACLE_N)
    rec = a_table(ORACLE_N)
    closed_ok = all(
        a_closed(n, m) == rec(n, m) for n in range(1, ORACLE_N + 1) for m in range(n)
    )
    stats_ok = even == pairs
    oracle_ok = even == rec
    return (
        closed_ok and stats_ok and oracle_ok,
        f"n<={ORACLE_N}: oracle=recurrence {oracle_ok}, closed form=recurrence {closed_ok}, "
        f"even parts=equal pairs {stats_ok}",
    )


def unimodality() -> tuple[bool, str]:
    r = verify_unimodality(UNIMODAL_N)
    return r.ok, r.line()


def certificates() -> tuple[bool, str]:
    grid = DeltaGrid(4 * IDENTITY_M + 2)
    reports = [
        verify_delta_certificate(range(4, DELTA_CERT_N + 1), range(0, DELTA_CERT_N), grid),
        verify_g_certificate(range(2, 4 * G_CERT_M + 3), range(0, G_CERT_M + 1), grid),
        verify_degenerate_identity(range(1, IDENTITY_M + 1), grid),
        verify_4m2_reduction(range(1, IDENTITY_M + 1), grid),
        verify_boundary_formulas(range(1, IDENTITY_M + 1), grid),
    ]
    bad = [r for r in reports if not r.ok]
    checked = sum(r.checked for r in reports)
    detail = f"{checked} exact identities checked"
    if bad:
        detail += "; " + " | ".join(r.line() for r in bad)
    return not bad, detail


def ratios() -> tuple[bool, str]:
    r = verify_ratio_lemmas(RATIO_M)
    return r.ok, r.line()


def log_concavity() -> tuple[bool, str]:
    r = verify_log_concavity_defect(LOGCONCAVE_N)
    return r.ok, r.line()


def circle() -> tuple[bool, str]:
    worst_dev = worst_res = 0.0
    worst_right = -1.0
    bad = []
    for n in range(2, CIRCLE_N + 1):
        zs = f_roots(n)
        rep = certify_circle(zs, GEOMETRY_TOL, RESIDUAL_TOL)
        worst_dev = max(worst_dev, rep.max_circle_deviation)
        worst_res = max(worst_res, rep.max_residual)
        worst_right = max(worst_right, rep.max_right_excess)
        if not rep.ok or len(zs.points) != n - 1:
            bad.append(n)
    return not bad, (
        f"2<=n<={CIRCLE_N}: max ||z-1|-2|={worst_dev:.2e}, max Re(z)-1={worst_right:.2e}, "
        f"max residual={worst_res:.2e}, failing n={bad}"
    )


def lifts() -> tuple[bool, str]:
    exact_bad = [n for n in range(0, LIFT_EXACT_N + 1) if not w_lift(n).check_invariants()]
    real_bad = [
        n for n in range(1, LIFT_NUMERIC_N + 1) if not certify_negative_simple(lift_roots(n)).ok
    ]
    inter_bad = [n for n in range(1, LIFT_NUMERIC_N + 1) if not certify_interlacing(n).ok]
    chain_bad = [n for n in range(0, CHAIN_N + 1) if mobius_chain(n) != w_lift(n).poly]
    ok = not (exact_bad or real_bad or inter_bad or chain_bad)
    return ok, (
        f"exact invariants n<={LIFT_EXACT_N} bad={exact_bad}; negative simple n<={LIFT_NUMERIC_N} "
        f"bad={real_bad}; interlacing bad={inter_bad}; Moebius chain n<={CHAIN_N} bad={chain_bad}"
    )


def limits() -> tuple[bool, str]:
    r = wz_limits(1, 0, -1, 2)
    lo, hi = r.arc_endpoints
    centre, radius2 = r.arc_circle()
    shifted = {lo.shift(-1), hi.shift(-1)}
    ok = (
        r.discriminant == -1
        and r.isolated == ()
        and {lo, hi} == {ExactComplex.make(2, -2), ExactComplex.make(2, 2)}
        and r.through_point == 0
        and (centre, radius2) == (2, 4)
        and (centre - 1, radius2) == (1, 4)
        and shifted == {ExactComplex.make(1, 2), ExactComplex.make(1, -2)}
        and r.through_point - 1 == -1
    )
    return ok, (
        f"Delta_Delta={r.discriminant}, isolated={len(r.isolated)}, endpoints={lo},{hi}, "
        f"through={r.through_point}; shifted circle centre {centre - 1} radius^2 {radius2}"
    )


def density() -> tuple[bool, str]:
    stats = arc_density(DENSITY_N)
    gaps = dict(zip(stats.cutoffs, stats.gaps))
    monotone = all(b <= a for a, b in zip(stats.gaps, stats.gaps[1:]))
    halved = gaps[DENSITY_N] < 0.5 * gaps[50]
    return monotone and halved and stats.outside == 0, (
        f"gap(50)={gaps[50]:.4f}, gap({DENSITY_N})={gaps[DENSITY_N]:.4f}, "
        f"non-increasing={monotone}, off-arc roots={stats.outside}"
    )


CRITERIA: list[tuple[int, str, Callable[[], tuple[bool, str]], float | None]] = [
    (1, "table reproduction", tables, 1.0),
    (2, "triple cross-validation", cross_validation, 30.0),
    (3, "strong unimodality", unimodality, 10.0),
    (4, "recurrence certificates", certificates, None),
    (5, "ratio lemmas", ratios, None),
    (6, "non-log-concavity", log_concavity, None),
    (7, "circle geometry", circle, 30.0),
    (8, "lift properties", lifts, None),
    (9, "limit of zeros", limits, None),
    (10, "arc density", density, None),
]


def run_criterion(number: int) -> CriterionResult:
    for num, name, fn, limit in CRITERIA:
        if num == number:
            t0 = time.perf_counter()
            try:
                passed, detail = fn()
            except Exception as exc:  # reported as a FAIL line, not a crash
                passed, detail = False, f"error: {exc!r}"
            return CriterionResult(num, name, passed, detail, time.perf_counter() - t0, limit)
    raise KeyError(f"no criterion {number}")


def run_all() -> list[CriterionResult]:
    return [run_criterion(num) for num, *_ in CRITERIA]
