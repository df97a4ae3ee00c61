from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import example, given, settings
from hypothesis import strategies as st

from oracles import evaluate_on_space, rand_linear, rand_quadratic, sympy_rank
from quadsg import linalg
from quadsg.errors import PreconditionError
from quadsg.qcore import (
    LinearForm,
    LinearSpace,
    QuadraticForm,
    congruent_mod,
    in_span,
    linear,
    minimal_representation,
    minimal_space,
    pairwise_independent,
    quadratic,
    rank_s,
    restrict,
    span_dimension,
)
from quadsg.scalars import QuadExt

XYZW = ["x", "y", "z", "w"]


def q(text, names=XYZW):
    return quadratic(text, names)


def space(*texts, names=XYZW):
    return LinearSpace.span([linear(t, names) for t in texts], len(names))


# --- types -----------------------------------------------------------------


def test_gram_convention():
    form = q("3*x*y + 5*z^2")
    assert form.gram[0][1] == Fraction(3, 2) and form.gram[2][2] == 5
    assert form.to_poly() == q("3*x*y + 5*z^2").to_poly()


def test_non_symmetric_gram_rejected():
    with pytest.raises(PreconditionError):
        QuadraticForm(((1, 2), (0, 1)))


def test_space_is_rref():
    sp = space("2*x + 2*y", "y - z")
    assert sp.rows() == [[1, 0, 1, 0], [0, 1, -1, 0]]
    assert sp.pivots() == [0, 1]
    assert linear("x + z", XYZW) in sp
    assert linear("w", XYZW) not in sp


# --- rank_s ----------------------------------------------------------------


def test_rank_s_examples():
    assert rank_s(q("x*y")) == 1
    assert rank_s(q("x*y + z*w")) == 2
    assert rank_s(q("x^2 + y^2")) == 1
    assert rank_s(QuadraticForm.zero(3)) == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_rank_s_is_half_gram_rank_rounded_up(seed):
    form = rand_quadratic(random.Random(seed), 5)
    assert rank_s(form) == (sympy_rank(form.gram) + 1) // 2


# --- minimal space ---------------------------------------------------------


def test_minimal_space_examples():
    assert minimal_space(q("x*y + z*w")).dim == 4
    assert minimal_space(q("x^2")) == space("x")
    ms = minimal_space(q("(x+y)^2 + z*(x-y)"))
    assert ms.dim == 3 == sympy_rank(q("(x+y)^2 + z*(x-y)").gram)
    assert minimal_space(QuadraticForm.zero(4)).dim == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 4))
def test_minimal_space_inside_any_representation(seed, m):
    rng = random.Random(seed)
    n = 6
    forms = [rand_linear(rng, n) for _ in range(2 * m)]
    total = QuadraticForm.zero(n)
    for a, b in zip(forms[::2], forms[1::2]):
        total = total + QuadraticForm.from_product(a, b)
    assert minimal_space(total).is_subspace_of(LinearSpace.span(forms, n))


# --- minimal representation ------------------------------------------------


def _expand(pairs, n):
    total = None
    for a, b in pairs:
        p = a * b
        total = p if total is None else total + p
    return total


def _rational_parts(f: LinearForm) -> list[list[Fraction]]:
    a = [c.a if isinstance(c, QuadExt) else Fraction(c) for c in f.coeffs]
    b = [c.b if isinstance(c, QuadExt) else Fraction(0) for c in f.coeffs]
    return [a, b]


def test_minimal_representation_examples():
    (pair,) = minimal_representation(q("x*y"))
    assert pair == (linear("x", XYZW), linear("y", XYZW))

    (a, b), = minimal_representation(q("x^2 + y^2"))
    i = QuadExt(0, 1, -1)
    assert {a.coeffs[1], b.coeffs[1]} == {i, -i}
    assert (a * b) == q("x^2 + y^2").to_poly()

    pairs = minimal_representation(q("x*y + z*w"))
    assert sorted(pairs, key=lambda p: p[0].pivot()) == [
        (linear("x", XYZW), linear("y", XYZW)),
        (linear("z", XYZW), linear("w", XYZW)),
    ]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 6))
@example(7942351, 6)  # pairs over Q(sqrt(302)) and Q(sqrt(-37))
def test_minimal_representation_reexpands(seed, n):
    form = rand_quadratic(random.Random(seed), n)
    pairs = minimal_representation(form)
    assert len(pairs) == rank_s(form)
    if pairs:
        assert _expand(pairs, n) == form.to_poly()
        # pairs may live in different extensions, so compare rational parts
        parts = [row for p in pairs for f in p for row in _rational_parts(f)]
        assert LinearSpace.span(parts, n) == minimal_space(form)


# --- restrict --------------------------------------------------------------


def test_restrict_examples():
    assert restrict(q("x*y + z*w"), space("x")) == q("z*w")
    assert restrict(q("x^2"), space("x")).is_zero()
    r = restrict(q("x*y + z*w"), space("x + z"))
    assert rank_s(r) == 1


def test_restrict_agrees_pointwise_on_the_zero_set():
    rng = random.Random(5)
    form = q("x*y + z*w")
    sp = space("x + z")
    r = restrict(form, sp)
    ker = linalg.nullspace(sp.rows(), 4)
    for _ in range(20):
        coeffs = [Fraction(rng.randint(-9, 9)) for _ in ker]
        assert evaluate_on_space(form, ker, coeffs) == evaluate_on_space(r, ker, coeffs)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.integers(2, 8), st.integers(0, 4))
def test_restriction_rank_bound(seed, n, delta):
    rng = random.Random(seed)
    delta = min(delta, n)
    form = rand_quadratic(rng, n)
    sp = LinearSpace.span([rand_linear(rng, n) for _ in range(delta)], n)
    assert rank_s(restrict(form, sp)) >= rank_s(form) - sp.dim


def test_restrict_of_zero_is_zero():
    assert restrict(QuadraticForm.zero(4), space("x")).is_zero()


# --- congruence and spans --------------------------------------------------


def test_congruent_mod_examples():
    assert congruent_mod(q("x*y"), q("x*y + x*z"), space("z"))
    assert not congruent_mod(q("x*y"), q("z*w"), space("x"))
    assert congruent_mod(q("x^2 + x*z + z*w"), q("x^2"), space("z"))


def test_span_ops_examples():
    forms = [q(t) for t in ("x*y + z*w", "x*y - z*w", "x*w", "y*z")]
    assert span_dimension(forms) == 4
    assert in_span(q("2*x*y"), q("x*y + z*w"), q("x*y - z*w")) == (1, 1)
    assert in_span(q("x*w"), q("x*y + z*w"), q("x*y - z*w")) is None
    assert not pairwise_independent([q("x*y"), q("3*x*y")])
    assert pairwise_independent(forms)


# --- structural claims -----------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 5))
def test_adding_fresh_product_raises_rank_by_one(seed, k):
    rng = random.Random(seed)
    p = rand_quadratic(rng, k).extend(2)
    n = k + 2
    y1, y2 = LinearForm.var(k, n), LinearForm.var(k + 1, n)
    total = p + QuadraticForm.from_product(y1, y2)
    assert rank_s(total) == rank_s(p) + 1
    assert y1 in minimal_space(total) and y2 in minimal_space(total)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_planted_ab_plus_cd_equals_ef(seed):
    # ab + cd = ef with a, b independent forces span{a,b} and span{c,d} to meet
    rng = random.Random(seed)
    n = 5
    a, b, u = (rand_linear(rng, n) for _ in range(3))
    if LinearSpace.span([a, b], n).dim < 2:
        return
    # e*f - a*b with e = a + u, f = b: cd = a*b + u*b - a*b = u*b
    c, d = u, b
    e, f = a + u, b
    lhs = QuadraticForm.from_product(a, b) + QuadraticForm.from_product(c, d)
    assert lhs == QuadraticForm.from_product(e, f)
    inter = LinearSpace.span([a, b], n).intersect(LinearSpace.span([c, d], n))
    assert inter.dim >= 1


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.booleans())
def test_planted_difference_inside_space_meets_it(seed, shape):
    # ab - cd with MS inside V: plant a = c + v, b = d with d in V (or the mirror image)
    rng = random.Random(seed)
    n = 6
    v_space = LinearSpace.span([rand_linear(rng, n) for _ in range(3)], n)
    rows = v_space.rows()

    def in_v():
        ws = [Fraction(rng.randint(-3, 3)) for _ in rows]
        return LinearForm(tuple(sum(w * r[i] for w, r in zip(ws, rows)) for i in range(n)))

    free, inside, shift = rand_linear(rng, n), in_v(), in_v()
    if shape:
        c, d = free, inside
        a, b = c + shift, d
    else:
        c, d = inside, free
        a, b = c, d + shift
    diff = QuadraticForm.from_product(a, b) - QuadraticForm.from_product(c, d)
    if diff.is_zero():
        return
    assert minimal_space(diff).is_subspace_of(v_space)
    assert LinearSpace.span([a, b], n).intersect(v_space).dim >= 1
