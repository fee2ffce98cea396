import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hookparts.poly import Poly
from hookparts.polyseq import f_poly, w_lift
from hookparts.rootgeom import (
    RESIDUAL_TOL,
    RootFindingError,
    arc_density,
    certify_circle,
    certify_interlacing,
    certify_negative_simple,
    circle_angle,
    exact_negative_root_count,
    f_roots,
    find_roots,
    lift_roots,
    max_angular_gap,
    sign_at,
)


def close_sets(got, want, tol=1e-12):
    got, want = sorted(got, key=lambda z: (z.real, z.imag)), sorted(want, key=lambda z: (z.real, z.imag))
    return len(got) == len(want) and all(abs(a - b) < tol for a, b in zip(got, want))


def test_linear_root():
    zs = f_roots(2)
    assert zs.points == (-1 + 0j,)
    assert zs.residual_bound == (0.0,)


def test_quadratic_formula_f3():
    r7 = math.sqrt(7)
    assert close_sets(f_roots(3).points, [complex(-0.5, r7 / 2), complex(-0.5, -r7 / 2)])


def test_factored_f4():
    r3 = math.sqrt(3)
    assert close_sets(f_roots(4).points, [-1, 1j * r3, -1j * r3])


def test_lift_two():
    r7 = math.sqrt(7)
    zs = lift_roots(2)
    assert close_sets(zs.points, [(-4 - r7) / 3, (-4 + r7) / 3])
    assert certify_negative_simple(zs).ok
    assert certify_negative_simple(lift_roots(1)).ok


@pytest.mark.parametrize("n", [2, 3, 4, 10, 37, 61])
def test_circle(n):
    zs = f_roots(n)
    rep = certify_circle(zs)
    assert rep.ok, rep.offenders
    assert len(zs.points) == n - 1
    assert zs.max_residual <= RESIDUAL_TOL


@pytest.mark.parametrize("n", [5, 20, 60])
def test_conjugate_pairing_is_exact(n):
    pts = f_roots(n).points
    assert sorted(pts, key=lambda z: (z.real, z.imag)) == sorted(
        (z.conjugate() for z in pts), key=lambda z: (z.real, z.imag)
    )


def test_circle_report_flags_offenders():
    # z^2 + 1 has roots +-i, at distance sqrt 2 from 1
    rep = certify_circle(find_roots(Poly([1, 0, 1])))
    assert not rep.ok and len(rep.offenders) == 2


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=4).filter(lambda c: c[-1] != 0))
def test_roots_match_numpy_on_small_integer_polys(coeffs):
    p = Poly(coeffs)
    if p.degree < 1:
        return
    try:
        ours = find_roots(p).points
    except RootFindingError:
        # repeated roots cannot meet a 1e-12 Newton residual; accept a loose tolerance then
        ours = find_roots(p, tol=1e-4).points
    ref = np.roots(list(reversed(coeffs)))
    for z in ref:
        assert min(abs(z - w) for w in ours) < 1e-5


def test_degree_zero_rejected():
    with pytest.raises(ValueError):
        find_roots(Poly([3]))


def test_unconvergeable_raises():
    with pytest.raises(RootFindingError, match="did not converge"):
        find_roots(Poly([1, 2, 1]) ** 4, tol=1e-300)


def test_high_degree_uncertified_still_on_circle():
    zs = f_roots(200)
    assert not zs.certified or zs.max_residual <= 1e-12
    assert max(abs(abs(z - 1) - 2) for z in zs.points) < 1e-8


def test_interlacing_small():
    assert certify_interlacing(1).ok
    rep = certify_interlacing(2)
    assert rep.ok and rep.min_gap > 0.5


def test_interlacing_and_real_roots_scan():
    for n in range(1, 61):
        assert certify_negative_simple(lift_roots(n)).ok
        assert certify_interlacing(n).ok


def test_interlacing_rejects_zero():
    with pytest.raises(ValueError):
        certify_interlacing(0)


def test_sign_at_is_exact():
    p = Poly([3, 8, 3])
    assert sign_at(p, -1) == -1
    assert sign_at(p, 0) == 1
    assert sign_at(p, Fraction(-1, 3)) == 1  # 3 - 8/3 + 1/3
    assert sign_at(Poly([1, 3]) * Poly([3, 1]), Fraction(-1, 3)) == 0
    assert sign_at(Poly([1, -2]), 0.5) == 0


def test_exact_count_for_lift():
    p = w_lift(12).poly
    assert exact_negative_root_count(p, lift_roots(12).sorted_real()) == 12
    # a deliberately wrong root list cannot fake the count
    assert exact_negative_root_count(p, [-1.0, -0.5]) < 12


def test_angles():
    assert circle_angle(1 + 2j) == pytest.approx(math.pi / 2)
    assert circle_angle(-1 + 0j) == pytest.approx(math.pi)
    assert circle_angle(1 - 2j) == pytest.approx(3 * math.pi / 2)
    assert 0 <= circle_angle(3 - 1e-9j) < 2 * math.pi
    assert max_angular_gap([]) == pytest.approx(math.pi)


def test_density_small():
    stats = arc_density(40, cutoffs=[10, 20, 40])
    assert stats.outside == 0
    assert stats.gaps == sorted(stats.gaps, reverse=True)


def test_density_validation():
    with pytest.raises(ValueError):
        arc_density(3)
    with pytest.raises(ValueError):
        arc_density(10, cutoffs=[20])
