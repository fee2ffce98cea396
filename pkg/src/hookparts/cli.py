"""Command-line front end.

    hookparts table --n-max 15
    hookparts delta-table --n-max 15
    hookparts verify --suite all
    hookparts roots --n 30
    hookparts plot --n-max 60 --out zeros.svg
    hookparts acceptance

Exit status is 0 iff no FAIL line was printed; invalid input exits with 2.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Sequence

from . import acceptance as acc
from .export import coefficients_csv, golden_csv, zeros_csv, zeros_svg
from .limits import wz_limits
from .partitions import DEFAULT_ENUMERATION_CAP, oracle_tables
from .polyseq import mobius_chain, w_lift
from .rootgeom import (
    GEOMETRY_TOL,
    RESIDUAL_TOL,
    RootFindingError,
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
from .unimodality import (
    check_sign_pattern,
    verify_log_concavity_defect,
    verify_ratio_lemmas,
    verify_unimodality,
)

SUITES = ("tables", "certificates", "unimodality", "ratios", "roots", "limits", "all")
COMMANDS = ("table", "delta-table", "verify", "roots", "plot", "acceptance")


class UsageError(ValueError):
    pass


@dataclass
class CliConfig:
    command: str
    n_max: int | None = None
    n: int | None = None
    m_max: int | None = None
    tol: float | None = None
    out: str | None = None
    suite: str = "all"
    family: str = "F"
    fmt: str | None = None

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.n_max is not None and self.n_max < 1:
            raise UsageError("--n-max must be positive")
        if self.m_max is not None and self.m_max < 1:
            raise UsageError("--m-max must be positive")
        if self.tol is not None and not self.tol > 0:
            raise UsageError("--tol must be positive")
        if self.command == "roots":
            if self.n is None:
                raise UsageError("roots needs --n")
            low = 2 if self.family == "F" else 1
            if self.n < low:
                raise UsageError(f"roots of family {self.family} need --n >= {low}")
        if self.command == "plot" and (self.n_max or 60) < 2:
            raise UsageError("plot needs --n-max >= 2")
        if self.command == "verify" and self.suite not in SUITES:
            raise UsageError(f"unknown suite {self.suite!r}")


# -- suites ---------------------------------------------------------------------


def _suite_tables(cfg: CliConfig) -> list[str]:
    n_max = cfg.n_max or acc.TABLE_N
    lines = []
    table = a_table(n_max)
    golden_rows = golden_csv("table1.csv").splitlines()[1:]
    ours = table.to_csv().splitlines()[1:]
    k = min(len(golden_rows), n_max)
    lines.append(_status(ours[:k] == golden_rows[:k], f"A rows 1..{k} match the reference A table"))
    golden_d = golden_csv("table2.csv").splitlines()[1:]
    ours_d = delta_table(n_max).to_csv().splitlines()[1:]
    lines.append(_status(ours_d[:k] == golden_d[:k], f"Delta rows 1..{k} match the reference Delta table"))
    closed = all(a_closed(n, m) == table(n, m) for n in range(1, n_max + 1) for m in range(n))
    lines.append(_status(closed, f"closed form equals recurrence for n <= {n_max}"))
    n_oracle = min(n_max, acc.ORACLE_N, DEFAULT_ENUMERATION_CAP)
    even, pairs = oracle_tables(n_oracle)
    lines.append(_status(even == pairs, f"even-part and equal-pair statistics agree for n <= {n_oracle}"))
    lines.append(_status(even == a_table(n_oracle), f"enumeration equals recurrence for n <= {n_oracle}"))
    return lines


def _suite_certificates(cfg: CliConfig) -> list[str]:
    n_max = cfg.n_max or acc.DELTA_CERT_N
    m_max = cfg.m_max or acc.G_CERT_M
    grid = DeltaGrid(max(n_max, 4 * m_max + 2) + 3)
    reports = [
        verify_delta_certificate(range(4, n_max + 1), range(0, n_max), grid),
        verify_g_certificate(range(2, 4 * m_max + 3), range(0, m_max + 1), grid),
        verify_degenerate_identity(range(1, m_max + 1), grid),
        verify_4m2_reduction(range(1, m_max + 1), grid),
        verify_boundary_formulas(range(1, m_max + 1), grid),
    ]
    return [r.line() for r in reports]


def _suite_unimodality(cfg: CliConfig) -> list[str]:
    n_max = cfg.n_max or acc.UNIMODAL_N
    if n_max < 6:
        raise UsageError("unimodality suite needs --n-max >= 6")
    return [
        verify_unimodality(n_max).line(),
        verify_log_concavity_defect(n_max).line(),
        check_sign_pattern(n_max).line(),
    ]


def _suite_ratios(cfg: CliConfig) -> list[str]:
    m_max = cfg.m_max or acc.RATIO_M
    if m_max < 5:
        raise UsageError("ratio suite needs --m-max >= 5")
    return [verify_ratio_lemmas(m_max).line()]


def _suite_roots(cfg: CliConfig) -> list[str]:
    n_max = cfg.n_max or acc.CIRCLE_N
    tol = cfg.tol or GEOMETRY_TOL
    lines = []
    bad_circle = [n for n in range(2, n_max + 1) if not certify_circle(f_roots(n), tol, RESIDUAL_TOL).ok]
    lines.append(_status(not bad_circle, f"zeros of F_n on left half of |z-1|=2 for 2 <= n <= {n_max}"))
    bad_real = [n for n in range(1, n_max + 1) if not certify_negative_simple(lift_roots(n)).ok]
    lines.append(_status(not bad_real, f"lift W_n has n negative simple zeros for n <= {n_max}"))
    bad_inter = [n for n in range(1, n_max + 1) if not certify_interlacing(n).ok]
    lines.append(_status(not bad_inter, f"W_(n-1) strictly interlaces W_n for n <= {n_max}"))
    k = min(n_max, acc.CHAIN_N)
    bad_chain = [n for n in range(0, k + 1) if mobius_chain(n) != w_lift(n).poly]
    lines.append(_status(not bad_chain, f"Moebius chain equals lift for n <= {k}"))
    return lines


def _suite_limits(cfg: CliConfig) -> list[str]:
    ok, detail = acc.limits()
    r = wz_limits(1, 0, -1, 2)
    return [_status(ok, f"limits of zeros for (a,b,c,d)=(1,0,-1,2): {detail}"),
            _status(r.isolated == (), "no isolated limits of zeros")]


_SUITES = {
    "tables": _suite_tables,
    "certificates": _suite_certificates,
    "unimodality": _suite_unimodality,
    "ratios": _suite_ratios,
    "roots": _suite_roots,
    "limits": _suite_limits,
}


def _status(ok: bool, text: str) -> str:
    return f"{'PASS' if ok else 'FAIL'} {text}"


# -- dispatch -------------------------------------------------------------------


def run(cfg: CliConfig) -> tuple[int, str]:
    """Execute one command; returns (exit status, text written)."""
    cfg.validate()
    if cfg.command == "table":
        return 0, a_table(cfg.n_max or acc.TABLE_N).to_csv()
    if cfg.command == "delta-table":
        return 0, delta_table(cfg.n_max or acc.TABLE_N).to_csv()
    if cfg.command == "roots":
        tol = cfg.tol or 1e-12
        if cfg.family == "F":
            zs = f_roots(cfg.n, tol)
        else:
            zs = lift_roots(cfg.n, tol)
        if cfg.fmt == "coeffs":
            return 0, coefficients_csv([(cfg.n, zs.poly)])
        return 0, zeros_csv([zs])
    if cfg.command == "plot":
        n_max = cfg.n_max or 60
        points = [z for n in range(2, n_max + 1) for z in f_roots(n, certify=False).points]
        return 0, zeros_svg(points, f"zeros of F_n, 2 <= n <= {n_max}")
    if cfg.command == "verify":
        names = [s for s in SUITES if s != "all"] if cfg.suite == "all" else [cfg.suite]
        lines = [line for name in names for line in _SUITES[name](cfg)]
        return _exit(lines), "\n".join(lines) + "\n"
    if cfg.command == "acceptance":
        lines = [r.line() for r in acc.run_all()]
        return _exit(lines), "\n".join(lines) + "\n"
    raise UsageError(cfg.command)


def _exit(lines: Sequence[str]) -> int:
    return 1 if any(line.startswith("FAIL") for line in lines) else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hookparts", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_max=True, n=False, m_max=False, tol=False):
        if n_max:
            p.add_argument("--n-max", type=int)
        if n:
            p.add_argument("--n", type=int, required=True)
        if m_max:
            p.add_argument("--m-max", type=int)
        if tol:
            p.add_argument("--tol", type=float)
        p.add_argument("--out", help="write output here instead of stdout")

    common(sub.add_parser("table", help="A(n, m) as CSV"))
    common(sub.add_parser("delta-table", help="Delta(n, m) as CSV"))
    p = sub.add_parser("verify", help="run identity and unimodality suites")
    common(p, m_max=True, tol=True)
    p.add_argument("--suite", choices=SUITES, default="all")
    p = sub.add_parser("roots", help="zeros of F_n (or of the lift W_n) as CSV")
    common(p, n_max=False, n=True, tol=True)
    p.add_argument("--family", choices=("F", "W"), default="F")
    p.add_argument("--format", dest="fmt", choices=("csv", "coeffs"), default="csv")
    common(sub.add_parser("plot", help="SVG of the zeros of F_2..F_{n-max}"))
    common(sub.add_parser("acceptance", help="run every acceptance criterion"), n_max=False)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = CliConfig(
        command=ns.command,
        n_max=getattr(ns, "n_max", None),
        n=getattr(ns, "n", None),
        m_max=getattr(ns, "m_max", None),
        tol=getattr(ns, "tol", None),
        out=ns.out,
        suite=getattr(ns, "suite", "all"),
        family=getattr(ns, "family", "F"),
        fmt=getattr(ns, "fmt", None),
    )
    try:
        status, text = run(cfg)
    except (UsageError, ValueError) as exc:
        print(f"hookparts: error: {exc}", file=sys.stderr)
        return 2
    except RootFindingError as exc:
        print(f"hookparts: {exc}", file=sys.stderr)
        return 1
    if cfg.out:
        with open(cfg.out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for line in text.splitlines():
        if line.startswith("FAIL"):
            print(line, file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
