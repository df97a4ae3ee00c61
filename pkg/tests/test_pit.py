from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import to_sympy
from quadsg.errors import PreconditionError, ResourceLimitExceeded
from quadsg.pit import (
    Circuit,
    expand_zero_test,
    gate_radical_report,
    random_circuit,
    schwartz_zippel_test,
    variable_reduction,
)
from quadsg.polyring.poly import product
from quadsg.polyring.radical import radical_member
from quadsg.qcore import QuadraticForm, quadratic

XYZW = ["x", "y", "z", "w"]


def q(text, names=XYZW):
    return quadratic(text, names)


def circuit(*gates, names=XYZW):
    return Circuit(len(names), tuple(tuple(q(t, names) for t in g) for g in gates))


ZERO = circuit(["x*y", "z*w"], ["x*y", "z*w"], ["-2*x*y", "z*w"])
SWAP = circuit(["x*y", "z*w"], ["-x*z", "y*w"])
PADDED = circuit(["x*y", "z*w"], ["x*z", "y*w"], ["-2*x*y", "z*w"])


def test_expansion_examples():
    assert expand_zero_test(ZERO)
    assert expand_zero_test(SWAP)
    assert not expand_zero_test(circuit(["x^2", "y^2"]))


def test_expansion_matches_sympy():
    for seed in range(10):
        c = random_circuit(3, 2, seed, zero=seed % 2 == 0)
        expr = sum(
            (product([f.to_poly() for f in g]) for g in c.gates[1:]),
            product([f.to_poly() for f in c.gates[0]]),
        )
        assert expand_zero_test(c) == (to_sympy(expr).expand() == 0)


def test_expansion_budget_is_distinct_error():
    with pytest.raises(ResourceLimitExceeded):
        expand_zero_test(circuit(["x^2", "y^2", "z^2"]), max_terms=10)


def test_invariants():
    with pytest.raises(PreconditionError):
        Circuit(4, ())
    with pytest.raises(PreconditionError):
        Circuit(4, ((),))
    with pytest.raises(PreconditionError):
        Circuit(4, ((QuadraticForm.zero(4),),))
    with pytest.raises(PreconditionError):
        Circuit(4, ((q("x*y"),),) * 4)


def test_schwartz_zippel_examples():
    for seed in range(10):
        assert schwartz_zippel_test(ZERO, 5, seed).verdict == "consistent_with_zero"
    res = schwartz_zippel_test(circuit(["x^2", "y^2"]), 1, seed=2024)
    assert res.verdict == "probably_nonzero" and res.trials == 1
    x, y = res.witness[0], res.witness[1]
    assert res.value == x**2 * y**2 != 0
    assert res.sample_size >= 2**20 * 4
    assert res == schwartz_zippel_test(circuit(["x^2", "y^2"]), 1, seed=2024)


def test_schwartz_zippel_needs_trials():
    with pytest.raises(PreconditionError):
        schwartz_zippel_test(ZERO, 0)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32))
def test_tests_never_disagree(seed):
    rng = random.Random(seed)
    c = random_circuit(rng.randint(1, 5), rng.randint(1, 3), seed, zero=rng.random() < 0.5)
    zero = expand_zero_test(c)
    sz = schwartz_zippel_test(c, 10, seed)
    assert (sz.verdict == "consistent_with_zero") == zero


def test_gate_report_on_padded_identity():
    rep = gate_radical_report(PADDED)
    assert rep.all_confirmed and len(rep.pairs) == 4
    g1 = PADDED.gates[0]
    for pair in rep.pairs:
        assert 1 <= len(pair.subset) <= 4
        f = product([g1[k].to_poly() for k in pair.subset])
        gens = [PADDED.gates[1][pair.j].to_poly(), PADDED.gates[2][pair.j2].to_poly()]
        assert radical_member(f, gens)


def test_gate_report_rejects_nonzero_circuits():
    with pytest.raises(PreconditionError):
        gate_radical_report(circuit(["x^2"], ["y^2"], ["z^2"]))
    with pytest.raises(PreconditionError):
        gate_radical_report(SWAP)


def test_gate_report_degree_one():
    c = random_circuit(4, 1, 3, zero=True)
    rep = gate_radical_report(c)
    assert len(rep.pairs) == 1 and rep.all_confirmed


def test_gate_report_on_generated_zero_circuits():
    for seed in range(6):
        c = random_circuit(4, 1 + seed % 3, seed, zero=True)
        assert gate_radical_report(c).all_confirmed


# --- variable reduction -----------------------------------------------------


def test_reduction_to_two_variables():
    names = [f"x{i}" for i in range(1, 11)]
    c = Circuit(10, ((q("x1*x2", names), q("x1^2 - x2^2", names)), (q("x2^2", names),)))
    red = variable_reduction(c)
    assert red.delta == 2 and red.circuit.n == 2
    assert red.pull_back() == c.expand()


def test_reduction_preserves_zeroness():
    for seed in range(20):
        c = random_circuit(2 + seed % 4, 1 + seed % 3, seed, zero=seed % 2 == 0)
        red = variable_reduction(c)
        assert expand_zero_test(red.circuit) == expand_zero_test(c)
        assert red.pull_back() == c.expand()


def test_identity_change_when_full():
    c = circuit(["x*y + z*w"], ["x^2 - w^2"])
    red = variable_reduction(c)
    assert red.delta == 4
    assert all(red.transform[i][j] == (1 if i == j else 0) for i in range(4) for j in range(4))
    assert red.circuit == c
