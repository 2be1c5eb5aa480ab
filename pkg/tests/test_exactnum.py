"""Exact scalars: Gaussian rationals, radicals, rational turns."""

from fractions import Fraction

import pytest

from logcharts.exactnum import (GAUSSIAN_ONE, GaussianRational, NonnegRoot,
                                rational_nth_root, turn_mod1,
                                unit_from_turn_exact, unit_from_turn_float)


def test_gaussian_arithmetic_matches_complex():
    a = GaussianRational(Fraction(1), Fraction(2))
    b = GaussianRational(Fraction(3), Fraction(-1))
    assert (a * b).to_complex() == (1 + 2j) * (3 - 1j)
    assert (a + b).to_complex() == (1 + 2j) + (3 - 1j)
    assert (a / b * b) == a
    assert a ** 3 == a * a * a
    assert a ** 0 == GAUSSIAN_ONE
    assert a ** -2 == GAUSSIAN_ONE / (a * a)
    assert a.abs2() == Fraction(5)


def test_gaussian_zero_division():
    with pytest.raises(ZeroDivisionError):
        GAUSSIAN_ONE / GaussianRational(Fraction(0))


def test_rational_nth_root():
    assert rational_nth_root(Fraction(27, 8), 3) == Fraction(3, 2)
    assert rational_nth_root(Fraction(2), 2) is None
    assert rational_nth_root(Fraction(0), 5) == 0
    assert rational_nth_root(Fraction(10 ** 30), 2) == 10 ** 15


def test_nonneg_root_normalization():
    assert NonnegRoot(Fraction(8), 3).as_rational() == 2
    assert NonnegRoot(Fraction(4, 9), 2) == NonnegRoot.of(Fraction(2, 3))
    assert not NonnegRoot(Fraction(2), 2).is_rational()
    assert NonnegRoot(Fraction(2), 2) == NonnegRoot(Fraction(4), 4)
    assert NonnegRoot(Fraction(0), 7).is_zero()


def test_nonneg_root_arithmetic():
    r2 = NonnegRoot(Fraction(2), 2)
    assert r2 * r2 == NonnegRoot.of(2)
    assert r2 ** 4 == NonnegRoot.of(4)
    assert (r2 ** -2) == NonnegRoot.of(Fraction(1, 2))
    assert NonnegRoot.of(5).root(3) == NonnegRoot(Fraction(5), 3)
    assert abs(float(r2) - 2 ** 0.5) < 1e-12


def test_turns():
    assert turn_mod1(Fraction(-1, 4)) == Fraction(3, 4)
    assert turn_mod1(Fraction(9, 4)) == Fraction(1, 4)
    assert unit_from_turn_exact(Fraction(1, 2)) == GaussianRational(Fraction(-1))
    assert unit_from_turn_exact(Fraction(5, 4)) == GaussianRational(Fraction(0), Fraction(1))
    # Niven: non-quarter rational turns are not Gaussian rational
    assert unit_from_turn_exact(Fraction(1, 3)) is None
    assert abs(unit_from_turn_float(Fraction(1, 4)) - 1j) < 1e-12
