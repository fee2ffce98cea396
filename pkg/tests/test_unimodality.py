from fractions import Fraction

import pytest

from hookparts.sequences import TriangleTable, a_table, delta
from hookparts.unimodality import (
    check_ratio_bounds,
    check_sign_pattern,
    check_strong_unimodality,
    check_upper_10_9,
    log_concavity_defect,
    mode,
    verify_log_concavity_defect,
    verify_ratio_lemmas,
    verify_unimodality,
)


@pytest.mark.parametrize("n, m, peak", [(15, 3, 3082), (6, 1, 10), (9, 2, 62)])
def test_mode_examples(n, m, peak):
    assert mode(n) == m
    assert max(a_table(n).row(n)) == peak == a_table(n)(n, m)


def test_mode_rejects_small_n():
    with pytest.raises(ValueError):
        mode(5)


def test_row_eight():
    assert a_table(8).row(8) == (21, 33, 31, 23, 11, 7, 1, 1)
    r = check_strong_unimodality(8)
    assert r.ok and r.argmax_indices == [1] and r.tail_ones_ok


def test_row_five_has_plateau():
    # below n = 6 the argmax need not be unique
    assert a_table(5).row(5)[:2] == (5, 5)


def test_unimodality_scan():
    assert verify_unimodality(300).ok


def test_unimodality_detects_a_bad_row():
    t = a_table(10)
    rows = [list(t.row(n)) for n in range(1, 11)]
    rows[9][3] = rows[9][2] + 1  # break the decrease after the mode
    assert not check_strong_unimodality(10, TriangleTable(rows)).ok


@pytest.mark.parametrize("n, value", [(10, -8), (3, -1)])
def test_log_concavity_examples(n, value):
    assert log_concavity_defect(n) == value


def test_log_concavity_scan():
    assert verify_log_concavity_defect(100).ok


def test_ratio_example_and_sharpness():
    assert Fraction(delta(8, 5), delta(9, 5)) == Fraction(2, 9)
    assert Fraction(1, 5) < Fraction(2, 9) < Fraction(7, 9)
    # just outside the range the upper bound fails
    assert Fraction(delta(7, 5), delta(8, 5)) > 1
    assert check_ratio_bounds(5).ok


def test_ten_ninths_examples():
    assert Fraction(delta(10, 3), delta(11, 3)) == Fraction(9, 11)
    assert Fraction(delta(14, 4), delta(15, 4)) == Fraction(192, 215)
    assert check_upper_10_9(3) and check_upper_10_9(4)


def test_seven_ninths_fails_at_4m_minus_1():
    # the 7/9 bound is claimed up to n = 4m-2 and fails one step later
    for m in range(5, 30):
        assert Fraction(delta(4 * m - 2, m), delta(4 * m - 1, m)) > Fraction(7, 9)


def test_ratio_scan():
    assert verify_ratio_lemmas(100).ok


@pytest.mark.parametrize("m", [3, 4])
def test_ratio_bounds_precondition(m):
    with pytest.raises(ValueError):
        check_ratio_bounds(m)


def test_sign_pattern():
    assert check_sign_pattern(300).ok
    assert check_sign_pattern(6).ok
