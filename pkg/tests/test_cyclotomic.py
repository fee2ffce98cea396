from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from hookparts.cyclotomic import CycloQ8

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
elements = st.builds(CycloQ8, rationals, rationals, rationals, rationals)


def test_named_constants():
    z = CycloQ8.zeta()
    assert (z - z**3) ** 2 == 2
    assert CycloQ8.sqrt2() ** 2 == 2
    assert CycloQ8.i() ** 2 == -1
    assert CycloQ8.zeta(2) == CycloQ8.i()
    assert z**8 == 1 and z**4 == -1


def test_complex_embedding():
    assert abs(complex(CycloQ8.zeta()) - (1 + 1j) / 2**0.5) < 1e-15
    assert abs(complex(CycloQ8.sqrt2()) - 2**0.5) < 1e-15


@given(elements, elements, elements)
def test_ring_axioms(x, y, w):
    assert (x + y) * w == x * w + y * w
    assert (x * y) * w == x * (y * w)
    assert x * y == y * x


@given(elements)
def test_inverse(x):
    assume(x != 0)
    assert x * x.inverse() == 1
    assert x / x == 1
    assert x ** -2 * x**2 == 1


@given(elements, elements)
def test_embedding_is_a_homomorphism(x, y):
    assert abs(complex(x * y) - complex(x) * complex(y)) < 1e-9 * (1 + abs(complex(x)) * abs(complex(y)))


@given(elements)
def test_norm_is_rational_and_conjugate_matches(x):
    assert isinstance(x.norm(), Fraction)
    assert abs(complex(x.conjugate()) - complex(x).conjugate()) < 1e-9


def test_to_fraction_rejects_irrational():
    assert CycloQ8(Fraction(3, 2)).to_fraction() == Fraction(3, 2)
    with pytest.raises(ValueError):
        CycloQ8.sqrt2().to_fraction()


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        CycloQ8().inverse()
