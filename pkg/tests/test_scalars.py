from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quadsg.scalars import QuadExt, as_fraction, is_rational, make, rational_sqrt, sqrt_rational, squarefree_decomposition

fractions = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)


def test_rationals_are_lowest_terms():
    assert as_fraction("6/4") == Fraction(3, 2)
    assert as_fraction(Fraction(-2, -4)).denominator == 2


def test_extension_with_zero_irrational_part_is_rational():
    x = make(Fraction(3), Fraction(0), -1)
    assert x == Fraction(3) and is_rational(x)


def test_i_squared_is_minus_one():
    i = QuadExt(0, 1, -1)
    assert i * i == -1
    assert str(i) == "i"


def test_squarefree_decomposition():
    assert squarefree_decomposition(72) == (6, 2)
    assert squarefree_decomposition(-12) == (2, -3)


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None


@given(fractions.filter(lambda f: f != 0))
def test_sqrt_squares_back(q):
    r = sqrt_rational(q)
    assert r * r == q


@given(fractions, fractions, fractions, fractions, st.sampled_from([-1, 2, -3, 5]))
def test_field_axioms(a, b, c, d, m):
    x, y = make(a, b, m), make(c, d, m)
    assert x * y == y * x
    assert (x + y) - y == x
    if y != 0:
        assert (x / y) * y == x


def test_mixing_fields_is_rejected():
    with pytest.raises(ValueError):
        QuadExt(0, 1, -1) + QuadExt(0, 1, 2)
