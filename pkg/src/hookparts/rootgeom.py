"""Numerical zeros of F_n and of the lift W_n, with certification.

Roots come from an Aberth iteration. For the two polynomial families the
iteration evaluates p and p' through the family's three-term recurrence
rather than through the coefficients: the coefficients of F_n grow like
2^n while its zeros sit on |z-1| = 2, and Horner evaluation in double
precision loses every digit by n ~ 100. Residuals |p(z)|/|p'(z)| used for
certification are recomputed with mpmath from the exact integer
coefficients, independently of the evaluator that located the roots.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import mpmath
import numpy as np

from .poly import Poly
from .polyseq import f_poly, w_lift

RESIDUAL_TOL = 1e-10
GEOMETRY_TOL = 1e-8
REAL_SNAP = 1e-9
CERTIFIED_DEGREE = 60

Evaluator = Callable[[np.ndarray], tuple[np.ndarray, np.ndarray]]


class RootFindingError(RuntimeError):
    pass


@dataclass(frozen=True)
class ZeroSet:
    source: tuple[str, int]
    poly: Poly
    points: tuple[complex, ...]
    residual_bound: tuple[float, ...]
    certified: bool = True

    def __post_init__(self):
        if len(self.points) != self.poly.degree:
            raise ValueError(
                f"{self.source}: {len(self.points)} roots for degree {self.poly.degree}"
            )

    @property
    def max_residual(self) -> float:
        return max(self.residual_bound, default=0.0)

    def sorted_real(self) -> list[float]:
        return sorted(z.real for z in self.points)


# -- evaluators ---------------------------------------------------------------


@dataclass(frozen=True)
class ThreeTermFamily:
    """P_k = A(z) P_{k-1} + B(z) P_{k-2} with P_0, P_1 given."""

    name: str
    p0: Poly
    p1: Poly
    step: Poly
    tail: Poly
    offset: int = 0  # family member n is P_{n - offset}

    def evaluator(self, n: int) -> Evaluator:
        k_max = n - self.offset
        if k_max < 0:
            raise ValueError(f"{self.name}: no member with index {n}")
        a, da = _np_poly(self.step), _np_poly(self.step.derivative())
        b, db = _np_poly(self.tail), _np_poly(self.tail.derivative())
        p0, dp0 = _np_poly(self.p0), _np_poly(self.p0.derivative())
        p1, dp1 = _np_poly(self.p1), _np_poly(self.p1.derivative())

        def evaluate(z: np.ndarray):
            f0, d0 = p0(z) + 0 * z, dp0(z) + 0 * z
            if k_max == 0:
                return f0, d0
            f1, d1 = p1(z) + 0 * z, dp1(z) + 0 * z
            av, dav, bv, dbv = a(z), da(z), b(z), db(z)
            for _ in range(2, k_max + 1):
                f2 = av * f1 + bv * f0
                d2 = dav * f1 + av * d1 + dbv * f0 + bv * d0
                # p/p' is scale free, so renormalise to keep magnitudes bounded
                s = np.maximum(np.maximum(np.abs(f2), np.abs(d2)), 1e-300)
                f0, d0, f1, d1 = f1 / s, d1 / s, f2 / s, d2 / s
            return f1, d1

        return evaluate


def _np_poly(p: Poly) -> Callable[[np.ndarray], np.ndarray]:
    cs = [complex(c) for c in p.coeffs] or [0j]

    def ev(z):
        acc = np.zeros_like(z) + cs[-1]
        for c in reversed(cs[:-1]):
            acc = acc * z + c
        return acc

    return ev


F_FAMILY = ThreeTermFamily("F", Poly([1]), Poly([1, 1]), Poly([1, 1]), Poly([1, -1]), offset=1)
LIFT_FAMILY = ThreeTermFamily("W", Poly([1]), Poly([2, 2]), Poly([2, 2]), Poly([-1, 0, -1]))


def horner_evaluator(p: Poly) -> Evaluator:
    ev, dev = _np_poly(p), _np_poly(p.derivative())
    return lambda z: (ev(z), dev(z))


# -- root finding -------------------------------------------------------------


def _initial_points(p: Poly) -> np.ndarray:
    """Perturbed circle about the root centroid.

    The radius is the geometric mean of the root distances from the
    centroid, |p(c) / lead|^(1/d), computed exactly before taking the root.
    """
    d = p.degree
    lead = Fraction(p.leading) if not isinstance(p.leading, complex) else p.leading
    centre = -Fraction(p[d - 1]) / (d * lead)
    at_centre = abs(p(centre) / lead)
    if at_centre == 0:
        radius = 1.0
    else:
        radius = math.exp((math.log(at_centre.numerator) - math.log(at_centre.denominator)) / d)
    k = np.arange(d)
    angles = 2 * np.pi * k / d + 0.4 / d + 0.1
    return float(centre) + max(radius, 1e-3) * np.exp(1j * angles)


def aberth(
    evaluate: Evaluator,
    start: np.ndarray,
    max_iter: int = 1000,
    step_tol: float = 1e-14,
    patience: int = 25,
) -> tuple[np.ndarray, bool]:
    """Simultaneous Aberth iteration; roots freeze individually once converged.

    Stops early when the largest step has dropped below 1e-8 and has not
    improved for ``patience`` sweeps (rounding noise of the evaluator).
    """
    z = start.astype(complex)
    d = len(z)
    if d == 0:
        return z, True
    active = np.ones(d, dtype=bool)
    best, stale = math.inf, 0
    with np.errstate(all="ignore"):
        for _ in range(max_iter):
            idx = np.flatnonzero(active)
            za = z[idx]
            p, dp = evaluate(za)
            ratio = p / dp
            diff = za[:, None] - z[None, :]
            diff[np.arange(len(idx)), idx] = 1.0
            s = (1.0 / diff).sum(axis=1) - 1.0
            w = ratio / (1.0 - ratio * s)
            w[~np.isfinite(w)] = 0.0
            z[idx] = za - w
            rel = np.abs(w) / np.maximum(1.0, np.abs(z[idx]))
            active[idx[rel <= step_tol]] = False
            if not active.any():
                return z, True
            worst = float(rel.max())
            if worst < best:
                best, stale = worst, 0
            else:
                stale += 1
            if best < 1e-8 and stale >= patience:
                return z, True
    return z, False


def _dps_for(p: Poly, z: complex) -> int:
    # digits lost to cancellation are bounded by the largest Horner term
    lr = math.log10(max(abs(z), 1e-300))
    big = max(
        (math.log10(abs(float(c))) + k * lr for k, c in enumerate(p.coeffs) if c != 0),
        default=0.0,
    )
    return 30 + max(int(big), 0)


def residual(p: Poly, z: complex) -> float:
    """|p(z)| / |p'(z)| evaluated in extended precision from exact coefficients."""
    with mpmath.workdps(_dps_for(p, z)):
        x = mpmath.mpc(z.real, z.imag)
        val = mpmath.mpf(0)
        der = mpmath.mpf(0)
        for c in reversed(p.coeffs):
            der = der * x + val
            val = val * x + mpmath.mpf(Fraction(c).numerator) / Fraction(c).denominator
        if der == 0:
            return math.inf if val != 0 else 0.0
        return float(abs(val) / abs(der))


def _newton_polish(p: Poly, z: complex, steps: int = 4) -> complex:
    with mpmath.workdps(_dps_for(p, z)):
        x = mpmath.mpc(z.real, z.imag)
        cs = [mpmath.mpf(Fraction(c).numerator) / Fraction(c).denominator for c in p.coeffs]
        for _ in range(steps):
            val = mpmath.mpf(0)
            der = mpmath.mpf(0)
            for c in reversed(cs):
                der = der * x + val
                val = val * x + c
            if der == 0:
                break
            step = val / der
            x = x - step
            if abs(step) <= 1e-20 * max(1, abs(x)):
                break
        return complex(x)


def _symmetrize(z: np.ndarray) -> list[complex]:
    """Pair roots of a real polynomial into exact conjugates; snap the rest to the axis."""
    scale = np.maximum(1.0, np.abs(z))
    upper = sorted((c for c, s in zip(z, scale) if c.imag > REAL_SNAP * s), key=lambda c: c.real)
    lower = sorted((c for c, s in zip(z, scale) if c.imag < -REAL_SNAP * s), key=lambda c: c.real)
    middle = [complex(c.real, 0.0) for c, s in zip(z, scale) if abs(c.imag) <= REAL_SNAP * s]
    if len(upper) != len(lower):
        return [complex(c) for c in z]
    out = middle[:]
    for u, l in zip(upper, lower):
        m = complex((u.real + l.real) / 2, (u.imag - l.imag) / 2)
        out.extend([m, m.conjugate()])
    return out


def find_roots(
    p: Poly,
    tol: float = 1e-12,
    *,
    evaluator: Evaluator | None = None,
    source: tuple[str, int] = ("poly", -1),
    certify: bool = True,
    max_iter: int = 1000,
) -> ZeroSet:
    """All complex roots of an integer or rational polynomial.

    With ``certify`` each root is polished by extended-precision Newton steps
    and must reach ``|p(z)|/|p'(z)| <= tol``; otherwise residuals are taken
    from the double-precision evaluator and the set is marked uncertified
    when they exceed ``tol``.
    """
    if p.degree < 1:
        raise ValueError(f"{source}: need degree >= 1, got {p.degree}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    real = all(isinstance(c, (int, Fraction)) for c in p.coeffs)
    if p.degree == 1:
        root = complex(-Fraction(p[0]) / Fraction(p[1]))
        return ZeroSet(source, p, (root,), (residual(p, root),), True)

    evaluate = evaluator or horner_evaluator(p)
    z, converged = aberth(evaluate, _initial_points(p), max_iter=max_iter)
    if not np.all(np.isfinite(z)):
        z = np.roots([complex(c) for c in reversed(p.coeffs)])
    points = _symmetrize(z) if real else [complex(c) for c in z]

    if certify:
        points = _polish_all(p, points, real)
        res = [residual(p, c) for c in points]
        if max(res) > tol:
            # companion-matrix restart, then polish again
            points = _polish_all(p, _symmetrize(np.roots([complex(c) for c in reversed(p.coeffs)])), real)
            res = [residual(p, c) for c in points]
        if max(res) > tol:
            worst = int(np.argmax(res))
            raise RootFindingError(
                f"roots of {source[0]}_{source[1]} did not converge: "
                f"residual {res[worst]:.3g} > {tol:g} at {points[worst]}"
            )
        ok = True
    else:
        with np.errstate(all="ignore"):
            pv, dv = evaluate(np.array(points))
            res = [float(x) for x in np.abs(pv / dv)]
        ok = all(r <= tol for r in res)
    order = sorted(range(len(points)), key=lambda k: (points[k].real, points[k].imag))
    return ZeroSet(source, p, tuple(points[k] for k in order), tuple(res[k] for k in order), ok)


def _polish_all(p: Poly, points: list[complex], real: bool) -> list[complex]:
    if real:
        # symmetrized input: real roots plus (upper, lower) conjugate pairs
        out: list[complex] = []
        for c in points:
            if c.imag < 0:
                continue
            m = _newton_polish(p, c)
            out.extend([complex(m.real, 0.0)] if c.imag == 0 else [m, m.conjugate()])
        if len(out) == len(points):
            return out
    return [_newton_polish(p, c) for c in points]


@lru_cache(maxsize=512)
def f_roots(n: int, tol: float = 1e-12, certify: bool | None = None) -> ZeroSet:
    """Zeros of F_n (degree n-1); cached per argument tuple."""
    certify = n <= CERTIFIED_DEGREE + 1 if certify is None else certify
    return find_roots(
        f_poly(n), tol, evaluator=F_FAMILY.evaluator(n), source=("F", n), certify=certify
    )


@lru_cache(maxsize=512)
def lift_roots(n: int, tol: float = 1e-12, certify: bool | None = None) -> ZeroSet:
    """Zeros of the lift W_n (degree n); cached per argument tuple."""
    certify = n <= CERTIFIED_DEGREE if certify is None else certify
    return find_roots(
        w_lift(n).poly, tol, evaluator=LIFT_FAMILY.evaluator(n), source=("W", n), certify=certify
    )


# -- certification -------------------------------------------------------------


@dataclass
class GeometryReport:
    source: tuple[str, int]
    ok: bool
    max_circle_deviation: float
    max_right_excess: float
    max_residual: float
    offenders: list = field(default_factory=list)


def certify_circle(
    zs: ZeroSet,
    tol_circle: float = GEOMETRY_TOL,
    residual_tol: float = RESIDUAL_TOL,
    center: complex = 1.0,
    radius: float = 2.0,
) -> GeometryReport:
    """Every root on |z - center| = radius, left of Re z = center, residual small."""
    devs, excess, offenders = [], [], []
    for z, r in zip(zs.points, zs.residual_bound):
        dev = abs(abs(z - center) - radius)
        right = z.real - center.real
        devs.append(dev)
        excess.append(right)
        if dev > tol_circle or right > tol_circle or r > residual_tol:
            offenders.append((z, dev, right, r))
    return GeometryReport(
        zs.source,
        not offenders,
        max(devs, default=0.0),
        max(excess, default=-math.inf),
        zs.max_residual,
        offenders,
    )


def sign_at(p: Poly, x: float | Fraction) -> int:
    """Exact sign of a rational polynomial at a dyadic or rational point."""
    q = Fraction(x)
    a, b = q.numerator, q.denominator
    # b^d p(a/b) = sum_k c_k a^k b^(d-k), by Horner from the top coefficient
    acc = Fraction(0)
    bpow = 1
    for c in reversed(p.coeffs):
        acc = acc * a + Fraction(c) * bpow
        bpow *= b
    return (acc > 0) - (acc < 0)


def exact_negative_root_count(p: Poly, approx_roots: Sequence[float]) -> int:
    """Count sign changes of p at points separating the approximate roots.

    The points are a value left of all roots, the midpoints, and 0; an exact
    count equal to the degree proves that many distinct negative roots.
    """
    rs = sorted(approx_roots)
    if not rs:
        return 0
    pts = [2 * rs[0] - 1.0] + [(a + b) / 2 for a, b in zip(rs, rs[1:])] + [0.0]
    signs = [sign_at(p, x) for x in pts]
    if 0 in signs:
        return -1
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


@dataclass
class RealRootReport:
    n: int
    ok: bool
    max_imag: float
    max_root: float
    min_separation: float
    exact_sign_changes: int


def certify_negative_simple(
    zs: ZeroSet, imag_tol: float = REAL_SNAP, separation_tol: float = 1e-12
) -> RealRootReport:
    n = zs.poly.degree
    imag = max((abs(z.imag) for z in zs.points), default=0.0)
    rs = zs.sorted_real()
    sep = min((b - a for a, b in zip(rs, rs[1:])), default=math.inf)
    top = rs[-1] if rs else -math.inf
    changes = exact_negative_root_count(zs.poly, rs)
    ok = imag <= imag_tol and top < 0 and sep > separation_tol and changes == n
    return RealRootReport(zs.source[1], ok, imag, top, sep, changes)


@dataclass
class InterlacingReport:
    n: int
    ok: bool
    min_gap: float
    offenders: list = field(default_factory=list)


def certify_interlacing(n: int) -> InterlacingReport:
    """Roots of W_{n-1} fall strictly between consecutive roots of W_n.

    Checked numerically, then cross-checked exactly: W_n must change sign at
    each approximate root of W_{n-1}, with the outer signs fixed by
    W_n(-inf) ~ (-1)^n and W_n(0) = n+1 > 0.
    """
    if n < 1:
        raise ValueError(f"interlacing needs n >= 1, got {n}")
    s = lift_roots(n).sorted_real()
    if n == 1:
        return InterlacingReport(n, True, math.inf)
    t = lift_roots(n - 1).sorted_real()
    offenders = []
    gaps = []
    for j, tj in enumerate(t):
        lo, hi = s[j], s[j + 1]
        gaps.append(min(tj - lo, hi - tj))
        if not lo < tj < hi:
            offenders.append(("numeric", j, lo, tj, hi))
    p = w_lift(n).poly
    signs = [(-1) ** n] + [sign_at(p, x) for x in t] + [1]
    for j, (a, b) in enumerate(zip(signs, signs[1:])):
        if a == 0 or a == b:
            offenders.append(("exact-sign", j, a, b))
    return InterlacingReport(n, not offenders, min(gaps, default=math.inf), offenders)


# -- density -------------------------------------------------------------------


@dataclass
class DensityStats:
    cutoffs: list[int]
    gaps: list[float]
    min_angle: float
    max_angle: float
    outside: int  # roots found off the left half arc


def circle_angle(z: complex, center: complex = 1.0) -> float:
    """Angle of z about the centre, branch [0, 2 pi)."""
    return math.atan2(z.imag - center.imag, z.real - center.real) % (2 * math.pi)


def max_angular_gap(angles: Sequence[float], lo: float = math.pi / 2, hi: float = 3 * math.pi / 2) -> float:
    pts = sorted([lo, hi, *(a for a in angles if lo <= a <= hi)])
    return max(b - a for a, b in zip(pts, pts[1:]))


def arc_density(n_max: int, cutoffs: Sequence[int] | None = None) -> DensityStats:
    """Max angular gap of the zeros of F_2..F_c on the left arc, for each cutoff c."""
    if n_max < 4:
        raise ValueError(f"n_max must be at least 4, got {n_max}")
    cutoffs = sorted(set(cutoffs or range(4, n_max + 1)))
    if cutoffs[-1] > n_max or cutoffs[0] < 2:
        raise ValueError("cutoffs must lie in [2, n_max]")
    angles: list[float] = []
    gaps: list[float] = []
    outside = 0
    want = iter(cutoffs)
    nxt = next(want)
    for n in range(2, n_max + 1):
        zs = f_roots(n, certify=False)
        for z in zs.points:
            a = circle_angle(z)
            if not (math.pi / 2 - GEOMETRY_TOL <= a <= 3 * math.pi / 2 + GEOMETRY_TOL):
                outside += 1
            angles.append(min(max(a, math.pi / 2), 3 * math.pi / 2))
        if n == nxt:
            gaps.append(max_angular_gap(angles))
            nxt = next(want, None)
    return DensityStats(list(cutoffs), gaps, min(angles), max(angles), outside)
