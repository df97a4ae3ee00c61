from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import from_sympy, rand_poly, to_sympy
from quadsg.errors import NotDivisibleError, PreconditionError
from quadsg.polyring.poly import MultiPoly, parse_poly
from quadsg.qcore import QuadraticForm

XYZW = ["x", "y", "z", "w"]


def p(text):
    return parse_poly(text, XYZW)


def test_arithmetic_examples():
    assert p("x+y") * p("x-y") == p("x^2-y^2")
    assert p("x^2-y^2").exact_divide(p("x+y")) == p("x-y")
    assert p("x*y+z*w") * p("x*y-z*w") == p("x^2*y^2-z^2*w^2")


def test_non_divisible_and_zero_division():
    with pytest.raises(NotDivisibleError):
        p("x^2+y").exact_divide(p("x+y"))
    with pytest.raises(ZeroDivisionError):
        p("x").exact_divide(MultiPoly.zero(4))


def test_no_zero_coefficients_stored():
    assert (p("x+y") - p("x+y")).terms == {}


def test_quadratic_round_trip():
    f = p("3*x*y - z^2 + 1/2*x*w")
    assert QuadraticForm.from_poly(f).to_poly() == f


def test_mismatched_rings_rejected():
    with pytest.raises(PreconditionError):
        MultiPoly.var(0, 2) + MultiPoly.var(0, 3)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_ring_operations_match_sympy(seed):
    rng = random.Random(seed)
    f, g = rand_poly(rng, 3, 3, 4), rand_poly(rng, 3, 3, 4)
    assert f + g == from_sympy(to_sympy(f) + to_sympy(g), 3)
    assert f - g == from_sympy(to_sympy(f) - to_sympy(g), 3)
    assert f * g == from_sympy(to_sympy(f) * to_sympy(g), 3)
    if not g.is_zero():
        assert (f * g).exact_divide(g) == f


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_substitute_is_composition(seed):
    rng = random.Random(seed)
    f = rand_poly(rng, 2, 3, 4)
    images = [rand_poly(rng, 3, 2, 3) for _ in range(2)]
    x1, x2 = __import__("sympy").symbols("x1:3")
    expected = to_sympy(f).subs({x1: to_sympy(images[0]), x2: to_sympy(images[1])}, simultaneous=True)
    assert f.substitute(images) == from_sympy(expected, 3)


def test_evaluate():
    assert p("x*y + z^2").evaluate([2, 3, 4, 0]) == 22
