import cmath
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hookparts.cyclotomic import CycloQ8
from hookparts.poly import Poly, is_palindromic
from hookparts.polyseq import (
    ChainError,
    f_poly,
    f_poly_from_table,
    mobius_chain,
    rationalize,
    shifted_w,
    shifted_w_direct,
    w_lift,
)

small_ints = st.lists(st.integers(-9, 9), max_size=6)


@given(small_ints, small_ints, st.integers(-5, 5))
def test_poly_arithmetic_agrees_with_evaluation(a, b, x):
    p, q = Poly(a), Poly(b)
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)
    assert (p - q)(x) == p(x) - q(x)


@given(small_ints, st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4))
def test_compose_linear(a, s, t, x):
    p = Poly(a)
    assert p.compose_linear(s, t)(x) == p(s * x + t)


def test_poly_basics():
    assert Poly([1, 2, 0, 0]).degree == 1
    assert Poly([]).degree == -1
    assert Poly([0, 0, 3]).derivative() == Poly([0, 6])


def test_f_poly_examples():
    assert f_poly(1) == Poly([1])
    assert f_poly(2) == Poly([1, 1])
    assert f_poly(3) == Poly([2, 1, 1])
    assert f_poly(4) == Poly([3, 3, 1, 1]) == Poly([1, 1]) * Poly([3, 0, 1])


@pytest.mark.parametrize("n", range(1, 16))
def test_f_poly_matches_table_rows(n):
    assert f_poly(n) == f_poly_from_table(n)


def test_lift_examples():
    assert w_lift(0).poly == Poly([1])
    assert w_lift(1).poly == Poly([2, 2])
    assert w_lift(2).poly == Poly([3, 8, 3])
    w5 = w_lift(5).poly
    assert w5.degree == 5 and w5.leading == 6 and is_palindromic(w5)


def test_lift_invariants_to_200():
    assert all(w_lift(n).check_invariants() for n in range(0, 201))


def test_chain_small_cases():
    assert mobius_chain(0) == Poly([1])
    assert mobius_chain(1) == Poly([2, 2])


def test_chain_matches_lift_to_40():
    for n in range(0, 41):
        p = mobius_chain(n)
        assert all(isinstance(c, Fraction) for c in p.coeffs)
        assert p == w_lift(n).poly


def test_chain_obeys_lift_recurrence():
    # two consecutive matches plus the shared recurrence pin the chain for all n
    step, tail = Poly([2, 2]), Poly([1, 0, 1])
    for n in range(2, 12):
        assert mobius_chain(n) == step * mobius_chain(n - 1) - tail * mobius_chain(n - 2)


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_chain_against_floating_formula(n):
    # independent evaluation of the transformation in complex floats
    zeta = cmath.exp(1j * cmath.pi / 4)
    f = f_poly(n + 1)
    for z in (0.3 + 0.1j, -1.7 + 0.4j, 2.0):
        u = 2 * (z + 1j) / (1j * z + 1) + 1
        value = zeta**n * (1j) ** (-n) * 2 ** (-n / 2) * (1j * z + 1) ** n * f(u)
        assert abs(value - w_lift(n).poly(z)) < 1e-8 * max(1, abs(value))


def test_chain_rejects_irrational_output():
    with pytest.raises(ChainError, match="powers \\[1\\]"):
        rationalize(Poly([CycloQ8(3), CycloQ8.sqrt2()]))
    assert rationalize(Poly([CycloQ8(3), CycloQ8.i() ** 2])) == Poly([3, -1])


def test_chain_unreduced_output_is_rational():
    raw = mobius_chain(6, require_rational=False)
    assert all(CycloQ8.coerce(c).is_rational() for c in raw.coeffs)


def test_shifted_examples():
    assert shifted_w(0) == Poly([1])
    assert shifted_w(1) == Poly([0, 1])
    assert shifted_w(2) == Poly([2, -1, 1])


@pytest.mark.parametrize("n", range(0, 201, 7))
def test_shifted_two_routes_agree(n):
    assert shifted_w(n) == shifted_w_direct(n)


@pytest.mark.parametrize(
    "coeffs, expected",
    [([3, 8, 3], True), ([1, 1], True), ([2, 1, 1], False), ([8, 10, 7, 5, 1, 1], False)],
)
def test_palindromes(coeffs, expected):
    assert is_palindromic(coeffs) is expected


def test_f_polys_are_not_palindromic():
    # 2 + z + z^2 is not palindromic; only the lifts are
    assert not is_palindromic(f_poly(3))
    assert not is_palindromic(f_poly(6))
