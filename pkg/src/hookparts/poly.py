"""Dense univariate polynomials over an exact coefficient ring.

Coefficients may be ints, Fractions or CycloQ8 elements; the class only
relies on ``+``, ``*`` and comparison with 0.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Sequence


def _is_zero(c: Any) -> bool:
    return c == 0


class Poly:
    """Immutable polynomial; ``coeffs[k]`` multiplies z**k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any] = ()):
        cs = list(coeffs)
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs: tuple = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c: Any = 1) -> "Poly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return len(self) == len(other) and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        if not self.coeffs:
            return other == 0
        return len(self) == 1 and self.coeffs[0] == other

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        o = other if isinstance(other, Poly) else Poly([other])
        n = max(len(self), len(o))
        return Poly(self[k] + o[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = other if isinstance(other, Poly) else Poly([other])
        return self + (-o)

    def __rsub__(self, other):
        return Poly([other]) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out: list = [0] * (len(self) + len(other) - 1)
        for j, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for k, b in enumerate(other.coeffs):
                out[j + k] = out[j + k] + a * b
        return Poly(out)

    def __rmul__(self, other):
        return Poly(other * c for c in self.coeffs)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result = Poly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def map(self, f) -> "Poly":
        return Poly(f(c) for c in self.coeffs)

    # -- evaluation and calculus ----------------------------------------

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(k * c for k, c in enumerate(self.coeffs) if k)

    def compose_linear(self, a, b) -> "Poly":
        """p(a z + b), by Horner accumulation."""
        lin = Poly([b, a])
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def reversed(self, n: int | None = None) -> "Poly":
        """z^n p(1/z); n defaults to the degree."""
        n = self.degree if n is None else n
        if n < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        return Poly([self[n - k] for k in range(n + 1)])

    def is_palindromic(self) -> bool:
        cs = self.coeffs
        return all(a == b for a, b in zip(cs, reversed(cs)))

    def to_fractions(self) -> "Poly":
        return self.map(Fraction)


def is_palindromic(p: Poly | Sequence) -> bool:
    cs = p.coeffs if isinstance(p, Poly) else tuple(p)
    return all(a == b for a, b in zip(cs, reversed(cs)))
