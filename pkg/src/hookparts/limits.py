"""Limits of zeros for W_n = (az+b) W_{n-1} + (cz+d) W_{n-2}, W_0 = 1, W_1 = z.

Only the case c^2 + a(bc - ad) < 0 is handled: the non-isolated limits then
form a circular arc and the isolated limits are roots of a quadratic that
survive a sign filter. Everything is exact: rationals plus one square root.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt


class UnsupportedCase(ValueError):
    pass


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    a, b = q.numerator, q.denominator
    ra, rb = isqrt(a), isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None


def _split_square(q: Fraction) -> tuple[Fraction, Fraction]:
    """q = s^2 * t with t an integer free of square factors below 10^4."""
    t = q.numerator * q.denominator
    s = Fraction(1, q.denominator)
    k = 2
    while k * k <= t and k < 10_000:
        while t % (k * k) == 0:
            t //= k * k
            s *= k
        k += 1
    return s, Fraction(t)


@dataclass(frozen=True)
class Surd:
    """x + y * sqrt(r) with rational x, y and rational r > 0."""

    x: Fraction
    y: Fraction = Fraction(0)
    r: Fraction = Fraction(1)

    @staticmethod
    def make(x, y=0, r=1) -> "Surd":
        x, y, r = Fraction(x), Fraction(y), Fraction(r)
        if r <= 0:
            raise ValueError("radicand must be positive")
        root = _rational_sqrt(r)
        if root is not None:
            return Surd(x + y * root)
        if y == 0:
            return Surd(x)
        scale, core = _split_square(r)
        return Surd(x, y * scale, core)

    def _radicand(self, other: "Surd") -> Fraction:
        if self.y and other.y and self.r != other.r:
            raise ValueError(f"surds with different radicands {self.r} and {other.r}")
        return self.r if self.y else other.r

    def __add__(self, other):
        o = other if isinstance(other, Surd) else Surd.make(other)
        return Surd.make(self.x + o.x, self.y + o.y, self._radicand(o))

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.x, -self.y, self.r)

    def __sub__(self, other):
        o = other if isinstance(other, Surd) else Surd.make(other)
        return self + (-o)

    def __rsub__(self, other):
        return Surd.make(other) - self

    def __mul__(self, other):
        o = other if isinstance(other, Surd) else Surd.make(other)
        r = self._radicand(o)
        return Surd.make(self.x * o.x + self.y * o.y * r, self.x * o.y + self.y * o.x, r)

    __rmul__ = __mul__

    def __truediv__(self, other):
        q = Fraction(other)
        return Surd.make(self.x / q, self.y / q, self.r)

    def sign(self) -> int:
        """Exact sign of x + y sqrt(r)."""
        sx = (self.x > 0) - (self.x < 0)
        sy = (self.y > 0) - (self.y < 0)
        if sy == 0 or sx == sy:
            return sx if sx else sy
        if sx == 0:
            return sy
        # opposite signs: compare x^2 with y^2 r
        lhs, rhs = self.x * self.x, self.y * self.y * self.r
        if lhs == rhs:
            return 0
        return sx if lhs > rhs else sy

    def is_rational(self) -> bool:
        return self.y == 0

    def __float__(self) -> float:
        return float(self.x) + float(self.y) * float(self.r) ** 0.5

    def __eq__(self, other) -> bool:
        o = other if isinstance(other, Surd) else Surd.make(other)
        return (self - o).sign() == 0

    def __hash__(self) -> int:
        return hash((self.x, self.y, self.r if self.y else 1))

    def __str__(self) -> str:
        if not self.y:
            return str(self.x)
        coef = "" if abs(self.y) == 1 else f"{abs(self.y)}*"
        root = f"{coef}sqrt({self.r})"
        if not self.x:
            return root if self.y > 0 else f"-{root}"
        return f"{self.x} {'+' if self.y > 0 else '-'} {root}"


@dataclass(frozen=True)
class ExactComplex:
    re: Surd
    im: Surd

    @staticmethod
    def make(re, im=0) -> "ExactComplex":
        re = re if isinstance(re, Surd) else Surd.make(re)
        im = im if isinstance(im, Surd) else Surd.make(im)
        return ExactComplex(re, im)

    def __add__(self, other):
        o = other if isinstance(other, ExactComplex) else ExactComplex.make(other)
        return ExactComplex(self.re + o.re, self.im + o.im)

    def shift(self, t) -> "ExactComplex":
        return ExactComplex(self.re + t, self.im)

    def conjugate(self) -> "ExactComplex":
        return ExactComplex(self.re, -self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __eq__(self, other) -> bool:
        o = other if isinstance(other, ExactComplex) else ExactComplex.make(other)
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __str__(self) -> str:
        if self.im.sign() == 0:
            return str(self.re)
        if self.re.sign() == 0:
            return f"({self.im})i"
        return f"({self.re}) + ({self.im})i"


@dataclass(frozen=True)
class IsolatedCandidate:
    point: ExactComplex
    filter_sign: int  # sign of Re((az+b) * conj((2-a)z - b)); kept iff negative

    @property
    def passes(self) -> bool:
        return self.filter_sign < 0


@dataclass(frozen=True)
class LimitZeroResult:
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    discriminant: Fraction
    candidates: tuple[IsolatedCandidate, ...]
    arc_endpoints: tuple[ExactComplex, ExactComplex]  # (x_minus, x_plus)
    through_point: Fraction

    @property
    def isolated(self) -> tuple[ExactComplex, ...]:
        return tuple(c.point for c in self.candidates if c.passes)

    def arc_circle(self) -> tuple[Fraction, Fraction]:
        """(centre, radius^2) of the circle carrying the arc.

        The endpoints are conjugate and the through-point is real, so the
        centre h is real: |h - t|^2 = (h - u)^2 + v^2 with u = Re x, v = Im x.
        """
        u = self.arc_endpoints[1].re
        v2 = self.arc_endpoints[1].im * self.arc_endpoints[1].im
        if not (u.is_rational() and v2.is_rational()):
            raise ValueError("arc endpoints are not of the expected form")
        t = self.through_point
        if u.x == t:
            raise ValueError("endpoints and through-point are collinear")
        h = (u.x * u.x + v2.x - t * t) / (2 * (u.x - t))
        return h, (h - t) ** 2


def _candidate_filter(a, b, z: ExactComplex) -> int:
    # Re((a z + b) * conj((2-a) z - b)) for z = x + i y:
    #   (a x + b)((2-a) x - b) + a (2-a) y^2
    x, y = z.re, z.im
    value = (x * a + b) * (x * (2 - a) - b) + y * y * (a * (2 - a))
    return value.sign()


def _quadratic_roots(qa: Fraction, qb: Fraction, qc: Fraction) -> list[ExactComplex]:
    """Roots of qa z^2 + qb z + qc, degenerating to the linear case when qa = 0."""
    if qa == 0:
        if qb == 0:
            return []
        return [ExactComplex.make(-qc / qb)]
    disc = qb * qb - 4 * qa * qc
    centre = -qb / (2 * qa)
    half = Fraction(1, 2 * qa)
    if disc == 0:
        return [ExactComplex.make(centre)]
    if disc > 0:
        return [
            ExactComplex.make(Surd.make(centre, -abs(half), disc)),
            ExactComplex.make(Surd.make(centre, abs(half), disc)),
        ]
    return [
        ExactComplex.make(centre, Surd.make(0, -abs(half), -disc)),
        ExactComplex.make(centre, Surd.make(0, abs(half), -disc)),
    ]


def wz_limits(a, b, c, d) -> LimitZeroResult:
    """Isolated and non-isolated limits of zeros, case c^2 + a(bc - ad) < 0."""
    a, b, c, d = (Fraction(v) for v in (a, b, c, d))
    if a == 0 or c == 0:
        raise ValueError("need a != 0 and c != 0")
    if (a, b, c, d) == (1, 0, 0, 0):
        raise ValueError("the sequence z^n is excluded")
    disc = c * c + a * (b * c - a * d)
    if disc >= 0:
        raise UnsupportedCase(f"discriminant {disc} >= 0 is not handled")
    candidates = tuple(
        IsolatedCandidate(z, _candidate_filter(a, b, z))
        for z in _quadratic_roots(1 - a, -(b + c), -d)
    )
    # sqrt(disc) = i sqrt(-disc)
    re = (-a * b - 2 * c) / (a * a)
    im = Surd.make(0, 2 / (a * a), -disc)
    x_minus = ExactComplex.make(re, -im)
    x_plus = ExactComplex.make(re, im)
    return LimitZeroResult(a, b, c, d, disc, candidates, (x_minus, x_plus), -b / a)
