"""Exact arithmetic in Q(zeta_8), the field holding both i and sqrt(2).

Elements are c0 + c1 z + c2 z^2 + c3 z^3 with z = exp(i pi/4), so z^4 = -1.
"""
from __future__ import annotations

import cmath
from fractions import Fraction
from numbers import Rational

_Scalar = (int, Fraction)


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class CycloQ8:
    __slots__ = ("c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self.c: tuple[Fraction, Fraction, Fraction, Fraction] = (
            _frac(c0),
            _frac(c1),
            _frac(c2),
            _frac(c3),
        )

    # -- constructors ---------------------------------------------------

    @classmethod
    def zeta(cls, k: int = 1) -> "CycloQ8":
        """zeta_8^k for any integer k."""
        k %= 8
        sign = -1 if k >= 4 else 1
        coeffs = [0, 0, 0, 0]
        coeffs[k % 4] = sign
        return cls(*coeffs)

    @classmethod
    def i(cls) -> "CycloQ8":
        return cls.zeta(2)

    @classmethod
    def sqrt2(cls) -> "CycloQ8":
        # zeta + zeta^-1 = zeta - zeta^3
        return cls(0, 1, 0, -1)

    @classmethod
    def coerce(cls, x) -> "CycloQ8":
        if isinstance(x, CycloQ8):
            return x
        if isinstance(x, Rational):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into Q(zeta_8)")

    # -- predicates -----------------------------------------------------

    def is_rational(self) -> bool:
        return self.c[1] == 0 and self.c[2] == 0 and self.c[3] == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.c[0]

    def __bool__(self) -> bool:
        return any(self.c)

    def __eq__(self, other) -> bool:
        try:
            other = CycloQ8.coerce(other)
        except TypeError:
            return NotImplemented
        return self.c == other.c

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.c[0])
        return hash(self.c)

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        try:
            o = CycloQ8.coerce(other)
        except TypeError:
            return NotImplemented
        return CycloQ8(*(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return CycloQ8(*(-a for a in self.c))

    def __sub__(self, other):
        try:
            o = CycloQ8.coerce(other)
        except TypeError:
            return NotImplemented
        return CycloQ8(*(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        return CycloQ8.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, _Scalar):
            return CycloQ8(*(a * other for a in self.c))
        try:
            o = CycloQ8.coerce(other)
        except TypeError:
            return NotImplemented
        out = [Fraction(0)] * 4
        for j, a in enumerate(self.c):
            if not a:
                continue
            for k, b in enumerate(o.c):
                if not b:
                    continue
                e = j + k
                if e >= 4:
                    out[e - 4] -= a * b
                else:
                    out[e] += a * b
        return CycloQ8(*out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = CycloQ8(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- field structure ------------------------------------------------

    def galois(self, k: int) -> "CycloQ8":
        """Apply zeta -> zeta^k for odd k."""
        if k % 2 == 0:
            raise ValueError("Galois automorphisms of Q(zeta_8) use odd exponents")
        out = CycloQ8()
        for j, a in enumerate(self.c):
            if a:
                out = out + CycloQ8.zeta(j * k) * a
        return out

    def conjugate(self) -> "CycloQ8":
        return self.galois(7)

    def norm(self) -> Fraction:
        """Field norm to Q: product of the four Galois images."""
        n = self * self.galois(3) * self.galois(5) * self.galois(7)
        return n.to_fraction()

    def inverse(self) -> "CycloQ8":
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_8)")
        others = self.galois(3) * self.galois(5) * self.galois(7)
        n = (self * others).to_fraction()
        return others * (1 / n)

    def __truediv__(self, other):
        if isinstance(other, _Scalar):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        return self * CycloQ8.coerce(other).inverse()

    def __rtruediv__(self, other):
        return CycloQ8.coerce(other) * self.inverse()

    def __complex__(self) -> complex:
        z = cmath.exp(1j * cmath.pi / 4)
        return sum(float(a) * z**j for j, a in enumerate(self.c))

    def __repr__(self) -> str:
        if self.is_rational():
            return f"CycloQ8({self.c[0]})"
        return "CycloQ8({})".format(", ".join(str(a) for a in self.c))
