from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import rand_linear, rand_quadratic, sympy_pencil_has_reducible_member, sympy_radical_member
from quadsg import linalg
from quadsg.errors import PreconditionError
from quadsg.polyring.poly import product
from quadsg.polyring.radical import radical_member
from quadsg.qcore import LinearSpace, QuadraticForm, linear, quadratic, restrict_gram
from quadsg.structure import (
    classify,
    common_isotropic_plane,
    gupta_reduce,
    isotropic_plane,
    make_instance,
    reducible_members,
)

XYZW = ["x", "y", "z", "w"]
SIX = ["x", "y", "z", "w", "u", "v"]


def q(text, names=XYZW):
    return quadratic(text, names)


# --- reducible members ------------------------------------------------------


def test_reducible_members_of_the_two_quadric_example():
    a, b = q("x*y + z*w"), q("x*y - z*w")
    res = reducible_members(a, b)
    assert res.exists
    params = {(w.alpha, w.beta): w for w in res.witnesses}
    assert (1, 1) in params and (1, -1) in params
    c, d = params[(1, 1)].factors
    assert c * d == q("2*x*y").to_poly()
    c, d = params[(1, -1)].factors
    assert c * d == q("2*z*w").to_poly()
    assert all(w.verify(a, b) for w in res.witnesses)


def test_reducible_members_rank_five_pair_witnesses_verify():
    rng = random.Random(4)
    a = quadratic("x^2 + y*z + u*w", ["x", "y", "z", "w", "u"])
    for _ in range(5):
        b = rand_quadratic(rng, 5, rank=5)
        res = reducible_members(a, b)
        assert res.exists == sympy_pencil_has_reducible_member(a, b)
        for w in res.witnesses:
            assert w.verify(a, b)


def test_squares_are_reducible_members():
    res = reducible_members(q("x^2"), q("y^2"))
    assert res.exists
    assert any((w.alpha, w.beta) == (1, 0) for w in res.witnesses)


def test_small_rings_always_reducible():
    assert reducible_members(quadratic("x^2+y^2", ["x", "y"]), quadratic("x*y", ["x", "y"])).exists


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from(["generic", "planted"]))
def test_reducible_members_matches_sympy(seed, kind):
    rng = random.Random(seed)
    n = 4
    a = rand_quadratic(rng, n)
    if kind == "planted":
        b = a.scale(rng.randint(1, 3)) + QuadraticForm.from_product(rand_linear(rng, n), rand_linear(rng, n))
    else:
        b = rand_quadratic(rng, n)
    if linalg.rank([a.upper(), b.upper()]) < 2:
        return
    res = reducible_members(a, b)
    assert res.exists == sympy_pencil_has_reducible_member(a, b)
    assert all(w.verify(a, b) for w in res.witnesses)


def test_three_variables_always_have_a_reducible_member():
    rng = random.Random(2)
    for _ in range(10):
        a, b = rand_quadratic(rng, 3), rand_quadratic(rng, 3)
        assert reducible_members(a, b).exists


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32))
def test_reducible_members_invariant_under_change_of_variables(seed):
    rng = random.Random(seed)
    n = 4
    a = rand_quadratic(rng, n)
    b = rand_quadratic(rng, n) if rng.random() < 0.5 else a + QuadraticForm.from_product(rand_linear(rng, n), rand_linear(rng, n))
    while True:
        m = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        if linalg.rank(m) == n:
            break
    mt = linalg.transpose(m)

    def move(form):
        return QuadraticForm(tuple(tuple(r) for r in linalg.matmul(mt, linalg.matmul([list(r) for r in form.gram], m))))

    assert reducible_members(a, b).exists == reducible_members(move(a), move(b)).exists


# --- isotropic planes -------------------------------------------------------


def _vanishes(form, plane):
    sp = plane.space()
    return all(x == 0 for row in restrict_gram(form.gram, sp) for x in row)


def test_common_plane_of_the_two_quadric_example():
    a, b = q("x*y + z*w"), q("x*y - z*w")
    plane = common_isotropic_plane(a, b)
    assert plane.space() == LinearSpace.span([linear("x", XYZW), linear("z", XYZW)])
    assert _vanishes(a, plane) and _vanishes(b, plane)


def test_common_plane_of_two_products_with_shared_factor():
    plane = common_isotropic_plane(q("x*y"), q("x*z"))
    assert linear("x", XYZW) in plane.space()
    assert plane.verify([q("x*y"), q("x*z")])


def test_rank_five_has_no_plane():
    names = ["x", "y", "z", "w", "u"]
    a = quadratic("x^2 + y*z + u*w", names)
    assert common_isotropic_plane(a, quadratic("x*y", names)) is None


def test_plane_search_by_brute_force_on_small_coordinates():
    # planes spanned by pairs of coordinate-like forms give an independent check
    rng = random.Random(9)
    n = 5
    found = 0
    for _ in range(15):
        la, lb = rand_linear(rng, n), rand_linear(rng, n)
        if LinearSpace.span([la, lb], n).dim < 2:
            continue
        a = QuadraticForm.from_product(la, rand_linear(rng, n)) + QuadraticForm.from_product(lb, rand_linear(rng, n))
        b = QuadraticForm.from_product(la, rand_linear(rng, n)) + QuadraticForm.from_product(lb, rand_linear(rng, n))
        plane = common_isotropic_plane(a, b)
        assert plane is not None and plane.verify([a, b])
        found += 1
    assert found >= 10


def test_isotropic_plane_of_sums_of_squares_needs_an_extension():
    # x^2 + y^2 + z^2 + w^2 contains planes only over Q(i)
    form = q("x^2 + y^2 + z^2 + w^2")
    plane = isotropic_plane([form])
    assert plane is not None and plane.verify([form])


# --- classify ---------------------------------------------------------------


def test_classify_two_quadric_example():
    a, b = q("x*y + z*w"), q("x*y - z*w")
    rep = classify(a, b, [q("x*w"), q("y*z")])
    assert rep.case_i is None
    assert rep.case_ii is not None and rep.case_iii is not None
    assert rep.case_iii.plane.space() == LinearSpace.span([linear("x", XYZW), linear("z", XYZW)])
    assert rep.oracle_confirmed is True


def test_classify_span_case():
    a, b = q("x*y + z^2"), q("x*w - y^2")
    rep = classify(a, b, [a + b])
    assert (rep.case_i.alpha, rep.case_i.beta) == (1, 1)


def test_classify_preconditions():
    with pytest.raises(PreconditionError):
        classify(q("x*y"), q("2*x*y"), [q("z^2")])
    with pytest.raises(PreconditionError):
        classify(q("x*y"), q("z*w"), [])


def test_classify_planted_case_iii():
    inst = make_instance("iii", 6, 3)
    rep = classify(inst.a, inst.b, inst.qs)
    assert rep.case_iii is not None and rep.case_iii.plane.verify([inst.a, inst.b])
    assert rep.oracle_confirmed


def test_vanishing_annotation():
    inst = make_instance("iii", 6, 1)
    rep = classify(inst.a, inst.b, inst.qs)
    assert rep.case_iii.vanishing_status == "found"
    k = rep.case_iii.vanishing_k
    assert _vanishes(inst.qs[k], rep.case_iii.plane)


@pytest.mark.parametrize("case", ["ii", "iii"])
def test_completeness_and_soundness(case):
    for seed in range(15):
        inst = make_instance(case, 5 if case == "ii" else 6, seed)
        rep = classify(inst.a, inst.b, inst.qs)
        assert rep.oracle_confirmed
        assert rep.any_case()
        if rep.case_ii is not None:
            assert all(w.verify(inst.a, inst.b) for w in rep.case_ii.witnesses)
        if rep.case_iii is not None:
            assert rep.case_iii.plane.verify([inst.a, inst.b])
        if rep.case_i is not None:
            k = rep.case_i.index
            assert inst.qs[k] == inst.a.scale(rep.case_i.alpha) + inst.b.scale(rep.case_i.beta)


# --- generators -------------------------------------------------------------


def test_case_iii_with_coordinate_forms():
    inst = make_instance("iii", 6, 0, coordinate_forms=True)
    names = [f"x{i}" for i in range(1, 7)]
    assert inst.a == quadratic("x1*x3 + x2*x4", names)
    assert inst.b == quadratic("x1*x5 + x2*x6", names)
    f = product([quadratic(t, names).to_poly() for t in ("x1^2", "x2^2", "x3*x6 - x4*x5")])
    assert radical_member(f, [inst.a.to_poly(), inst.b.to_poly()])


@pytest.mark.parametrize("n", [3, 5])
def test_case_ii_membership_is_identity_level(n):
    for seed in range(5):
        inst = make_instance("ii", n, seed)
        f = product([x.to_poly() for x in inst.qs])
        assert radical_member(f, [inst.a.to_poly(), inst.b.to_poly()])
    assert sympy_radical_member(f, [inst.a.to_poly(), inst.b.to_poly()])


def test_generators_are_reproducible():
    assert make_instance("ii", 5, 42) == make_instance("ii", 5, 42)
    assert make_instance("iii", 6, 42) != make_instance("iii", 6, 43)


def test_homogenised_case_iii():
    inst = make_instance("iii", 6, 5, homogenized=True)
    f = product([x.to_poly() for x in inst.qs])
    assert radical_member(f, [inst.a.to_poly(), inst.b.to_poly()])


# --- subset reduction -------------------------------------------------------


def test_gupta_reduce_drops_padding():
    a, b = q("x*y + z*w", SIX), q("x*y - z*w", SIX)
    qs = [q(t, SIX) for t in ("x*w", "y*z", "u^2 + v*w", "u^2 - v*w")]
    assert gupta_reduce(qs, a, b) == (0, 1)


def test_gupta_reduce_single_span_member():
    a, b = q("x*y + z^2"), q("x*w - y^2")
    assert gupta_reduce([a + b], a, b) == (0,)


def test_gupta_reduce_on_padded_case_iii():
    rng = random.Random(1)
    for seed in range(3):
        inst = make_instance("iii", 6, seed)
        pads = [rand_quadratic(rng, 6) for _ in range(2)]
        qs = list(inst.qs) + pads
        sub = gupta_reduce(qs, inst.a, inst.b)
        assert len(sub) <= 4
        f = product([qs[k].to_poly() for k in sub])
        assert radical_member(f, [inst.a.to_poly(), inst.b.to_poly()])


def test_gupta_reduce_requires_membership():
    with pytest.raises(PreconditionError):
        gupta_reduce([q("x^2")], q("y*z"), q("y*w"))
