from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import rand_linear
from quadsg.errors import PreconditionError
from quadsg.polyring.factor import factor_rank2
from quadsg.qcore import QuadraticForm, linear, quadratic
from quadsg.scalars import QuadExt

XY = ["x", "y", "z"]


def test_examples():
    assert factor_rank2(quadratic("x^2 - y^2", XY)) == (linear("x + y", XY), linear("x - y", XY))
    assert factor_rank2(quadratic("x*y", XY)) == (linear("x", XY), linear("y", XY))
    a, b = factor_rank2(quadratic("x^2 + y^2", XY))
    i = QuadExt(0, 1, -1)
    assert a.coeffs[:2] == (1, i) and b.coeffs[:2] == (1, -i)
    assert a * b == quadratic("x^2 + y^2", XY).to_poly()


def test_rank_three_rejected():
    with pytest.raises(PreconditionError):
        factor_rank2(quadratic("x^2 + y^2 + z^2", XY))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from(["product", "sum_of_squares", "square"]))
def test_reexpands(seed, shape):
    rng = random.Random(seed)
    n = 4
    a, b = rand_linear(rng, n), rand_linear(rng, n)
    if shape == "product":
        form = QuadraticForm.from_product(a, b)
    elif shape == "square":
        form = QuadraticForm.from_product(a, a).scale(rng.choice([1, 2, -3]))
    else:
        form = QuadraticForm.from_product(a, a) + QuadraticForm.from_product(b, b).scale(rng.choice([1, 2, 3, 5]))
    if form.is_zero():
        return
    c, d = factor_rank2(form)
    assert c * d == form.to_poly()
