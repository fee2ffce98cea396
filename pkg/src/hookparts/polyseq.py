"""Generating polynomials F_n, the real-rooted lift W_n and the shifted family.

Two families share the letter W in the literature; here they are kept apart:

* ``w_lift(n)``: W_n = 2(z+1) W_{n-1} - (z^2+1) W_{n-2}, W_0 = 1, W_1 = 2z+2.
  Its zeros are the images of the zeros of F_{n+1} under the Moebius map
  carrying the circle |z-1| = 2 to the real axis.
* ``shifted_w(n)``: F_{n+1}(z-1), which satisfies
  W_n = z W_{n-1} + (2-z) W_{n-2}, W_0 = 1, W_1 = z.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import CycloQ8
from .poly import Poly, is_palindromic  # noqa: F401  (re-exported)
from .sequences import a_table

Z = Poly([0, 1])


@lru_cache(maxsize=None)
def f_poly(n: int) -> Poly:
    """F_n(z) = sum_m A(n, m) z^m, built from (1+z) F_{n-1} + (1-z) F_{n-2}."""
    if n < 1:
        raise ValueError(f"F_n is defined for n >= 1, got {n}")
    if n == 1:
        return Poly([1])
    if n == 2:
        return Poly([1, 1])
    return Poly([1, 1]) * f_poly(n - 1) + Poly([1, -1]) * f_poly(n - 2)


def f_poly_from_table(n: int) -> Poly:
    return Poly(a_table(n).row(n))


@dataclass(frozen=True)
class LiftPoly:
    n: int
    poly: Poly

    def check_invariants(self) -> bool:
        p = self.poly
        return (
            p.degree == self.n
            and p.leading == self.n + 1
            and p[0] == self.n + 1
            and p.is_palindromic()
        )


_LIFT_STEP = Poly([2, 2])
_LIFT_TAIL = Poly([1, 0, 1])


@lru_cache(maxsize=None)
def _lift(n: int) -> Poly:
    if n == 0:
        return Poly([1])
    if n == 1:
        return Poly([2, 2])
    return _LIFT_STEP * _lift(n - 1) - _LIFT_TAIL * _lift(n - 2)


def w_lift(n: int) -> LiftPoly:
    if n < 0:
        raise ValueError(f"lift index must be nonnegative, got {n}")
    return LiftPoly(n, _lift(n))


@lru_cache(maxsize=None)
def shifted_w(n: int) -> Poly:
    """F_{n+1}(z - 1) via its own recurrence with (a, b, c, d) = (1, 0, -1, 2)."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    if n == 0:
        return Poly([1])
    if n == 1:
        return Z
    return Z * shifted_w(n - 1) + Poly([2, -1]) * shifted_w(n - 2)


def shifted_w_direct(n: int) -> Poly:
    return f_poly(n + 1).compose_linear(1, -1)


class ChainError(ArithmeticError):
    pass


def mobius_chain(n: int, *, require_rational: bool = True) -> Poly:
    """Carry F_{n+1} through the circle-to-line transform, exactly in Q(zeta_8).

    Steps: G(z) = F_{n+1}(2z+1); substitute z -> (z+i)/(iz+1) and clear
    (iz+1)^n; trade (iz+1)^n for (z-i)^n using iz+1 = i(z-i); rotate by
    zeta^n; divide by sqrt(2)^n. The output should be W_n with rational
    coefficients.
    """
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    i = CycloQ8.i()
    g = f_poly(n + 1).compose_linear(2, 1)
    deg = g.degree  # == n
    num = Poly([i, 1])  # z + i
    den = Poly([1, i])  # i z + 1
    # sum_k g_k (z+i)^k (iz+1)^(deg-k), Horner over the numerator powers
    acc = Poly([CycloQ8(g[deg])])
    den_pow = Poly([CycloQ8(1)])
    for k in range(deg - 1, -1, -1):
        den_pow = den_pow * den
        acc = acc * num + den_pow * g[k]
    # (z-i)^n = (iz+1)^n / i^n
    scale = CycloQ8.zeta(n) * i ** (-n) * CycloQ8.sqrt2() ** (-n)
    out = acc * scale
    return rationalize(out, f"n={n}") if require_rational else out


def rationalize(p: Poly, label: str = "") -> Poly:
    """Q(zeta_8) coefficients -> Fractions, or ChainError if any is irrational."""
    bad = [k for k, c in enumerate(p.coeffs) if not CycloQ8.coerce(c).is_rational()]
    if bad:
        raise ChainError(f"non-rational coefficients at powers {bad} {label}".rstrip())
    return Poly(CycloQ8.coerce(c).to_fraction() for c in p.coeffs)


def rational_as_int(p: Poly) -> Poly:
    """Map Fraction coefficients with denominator 1 to int."""

    def conv(c):
        c = Fraction(c)
        return c.numerator if c.denominator == 1 else c

    return p.map(conv)
