"""CSV and SVG emission for tables, coefficient lists and zero clouds."""
from __future__ import annotations

import csv
import io
from fractions import Fraction
from importlib import resources
from typing import Iterable, Sequence

from .poly import Poly
from .rootgeom import ZeroSet


def golden_csv(name: str) -> str:
    """Committed reference tables: ``table1.csv`` (A) or ``table2.csv`` (Delta)."""
    return (resources.files("hookparts") / "data" / name).read_text()


def coefficients_csv(polys: Iterable[tuple[int, Poly]]) -> str:
    """One row per polynomial: index, then exact coefficients from z^0 upward."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for n, p in polys:
        writer.writerow([n, *(_exact(c) for c in p.coeffs)])
    return buf.getvalue()


def _exact(c) -> str:
    if isinstance(c, Fraction) and c.denominator == 1:
        return str(c.numerator)
    return str(c)


def zeros_csv(sets: Iterable[ZeroSet]) -> str:
    """Rows ``n,re,im,residual``; no header."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for zs in sets:
        for z, r in zip(zs.points, zs.residual_bound):
            writer.writerow([zs.source[1], repr(float(z.real)), repr(float(z.imag)), repr(float(r))])
    return buf.getvalue()


# fixed viewport: real axis [-2, 4], imaginary axis [-3, 3]
_SIZE = 800
_X0, _X1, _Y0, _Y1 = -2.0, 4.0, -3.0, 3.0


def _px(z: complex) -> tuple[float, float]:
    x = (z.real - _X0) / (_X1 - _X0) * _SIZE
    y = (_Y1 - z.imag) / (_Y1 - _Y0) * _SIZE
    return round(x, 2), round(y, 2)


def zeros_svg(points: Sequence[complex], title: str = "zeros") -> str:
    """Zero cloud against the reference circle |z-1| = 2 with poles 1 +- 2i."""
    scale = _SIZE / (_X1 - _X0)
    cx, cy = _px(1 + 0j)
    ox, oy = _px(0j)
    top, bottom = _px(1 + 2j), _px(1 - 2j)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">',
        f"<title>{title}</title>",
        f'<rect width="{_SIZE}" height="{_SIZE}" fill="white"/>',
    ]
    for k in range(int(_X0), int(_X1) + 1):
        x, _ = _px(complex(k, 0))
        parts.append(f'<line x1="{x}" y1="0" x2="{x}" y2="{_SIZE}" stroke="#eeeeee"/>')
    for k in range(int(_Y0), int(_Y1) + 1):
        _, y = _px(complex(0, k))
        parts.append(f'<line x1="0" y1="{y}" x2="{_SIZE}" y2="{y}" stroke="#eeeeee"/>')
    parts += [
        f'<line x1="0" y1="{oy}" x2="{_SIZE}" y2="{oy}" stroke="black"/>',
        f'<line x1="{ox}" y1="0" x2="{ox}" y2="{_SIZE}" stroke="black"/>',
        f'<circle cx="{cx}" cy="{cy}" r="{2 * scale}" fill="none" stroke="#3060c0" '
        f'stroke-width="1.5" stroke-dasharray="6,4"/>',
        f'<path d="M {top[0]} {top[1]} A {2 * scale} {2 * scale} 0 0 0 {bottom[0]} {bottom[1]}" '
        f'fill="none" stroke="#3060c0" stroke-width="3"/>',
    ]
    for (x, y), label in ((top, "1+2i"), (bottom, "1-2i")):
        parts.append(f'<circle cx="{x}" cy="{y}" r="5" fill="none" stroke="black"/>')
        parts.append(f'<text x="{x + 8}" y="{y - 8}" font-size="14">{label}</text>')
    for z in points:
        x, y = _px(z)
        parts.append(f'<circle cx="{x}" cy="{y}" r="1.6" fill="#c03030"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
