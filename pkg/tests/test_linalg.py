from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import sympy_rank
from quadsg import linalg

entries = st.integers(-4, 4).map(Fraction)


def matrices(rows=st.integers(1, 5), cols=st.integers(1, 5)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(entries, min_size=rc[1], max_size=rc[1]), min_size=rc[0], max_size=rc[0])
    )


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_matches_sympy(m):
    assert linalg.rank(m) == sympy_rank(m)


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_nullspace_is_kernel(m):
    ker = linalg.nullspace(m, len(m[0]))
    assert len(ker) == len(m[0]) - linalg.rank(m)
    for v in ker:
        assert all(x == 0 for x in linalg.matvec(m, v))


def test_rref_is_canonical():
    rows, piv = linalg.rref([[2, 4, 6], [1, 2, 4]])
    assert piv == [0, 2]
    assert rows == [[1, 2, 0], [0, 0, 1]]


def test_inverse_roundtrip():
    rng = random.Random(1)
    for _ in range(20):
        m = [[Fraction(rng.randint(-5, 5)) for _ in range(4)] for _ in range(4)]
        if linalg.rank(m) < 4:
            continue
        assert linalg.matmul(m, linalg.inverse(m)) == linalg.identity(4)


def test_complete_basis_is_invertible_and_starts_with_rows():
    rows = [[Fraction(1), Fraction(1), Fraction(0)]]
    t = linalg.complete_basis(rows, 3)
    assert t[0] == rows[0] and linalg.rank(t) == 3


def test_row_space_intersection():
    u = [[1, 0, 0], [0, 1, 0]]
    v = [[1, 1, 0], [0, 0, 1]]
    inter = linalg.row_space_intersection(u, v)
    assert linalg.rank(inter) == 1
    assert linalg.rank(inter + [[1, 1, 0]]) == 1
