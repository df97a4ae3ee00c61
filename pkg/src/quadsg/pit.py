"""Zero testing for sums of at most three products of quadratic forms.

A circuit computes ``Phi = sum_i prod_j Q_{i,j}``.  Scalars are folded into
the factors, so there are no top-level constants.

The deterministic procedure shipped here is honest but not clever: it
rewrites the circuit in ``Delta`` variables (``Delta`` the dimension of the
joint minimal space of all factors) and then expands.  Its cost grows with
``Delta`` and the degree; it is not a polynomial-time identity test.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from . import linalg
from .errors import PreconditionError, ResourceLimitExceeded
from .polyring.groebner import Budget
from .polyring.poly import MultiPoly, product
from .polyring.radical import radical_member
from .qcore import LinearForm, QuadraticForm, joint_minimal_space
from .structure import gupta_reduce, random_linear_form, random_quadratic_form

DEFAULT_MAX_EXPANSION_TERMS = 2_000_000
SAMPLE_SCALE = 2**20


@dataclass(frozen=True)
class Circuit:
    """``n`` variables and 1 to 3 gates, each a nonempty tuple of nonzero quadratic forms."""

    n: int
    gates: tuple

    def __post_init__(self):
        gates = tuple(tuple(g) for g in self.gates)
        object.__setattr__(self, "gates", gates)
        if not 1 <= len(gates) <= 3:
            raise PreconditionError(f"a circuit has 1 to 3 gates, got {len(gates)}")
        for i, g in enumerate(gates):
            if not g:
                raise PreconditionError(f"gate {i} is empty")
            for q in g:
                if not isinstance(q, QuadraticForm):
                    raise PreconditionError("gate factors must be quadratic forms")
                if q.n != self.n:
                    raise PreconditionError(f"factor in {q.n} variables, circuit has {self.n}")
                if q.is_zero():
                    raise PreconditionError(f"gate {i} has a zero factor")

    @property
    def max_degree(self) -> int:
        """Largest number of factors in a gate (the gate has total degree twice this)."""
        return max(len(g) for g in self.gates)

    def factors(self) -> list[QuadraticForm]:
        return [q for g in self.gates for q in g]

    def expand(self) -> MultiPoly:
        out = MultiPoly.zero(self.n)
        for g in self.gates:
            out = out + product([q.to_poly() for q in g])
        return out

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for g in self.gates:
            v = Fraction(1)
            for q in g:
                v *= q.evaluate(point)
            total += v
        return total


def expand_zero_test(c: Circuit, max_terms: int = DEFAULT_MAX_EXPANSION_TERMS) -> bool:
    """Exact expansion; True iff ``Phi`` is the zero polynomial.

    Refuses with ``ResourceLimitExceeded`` when a gate could have more than
    ``max_terms`` monomials.
    """
    for g in c.gates:
        bound = comb(2 * len(g) + c.n - 1, c.n - 1)
        if bound > max_terms:
            raise ResourceLimitExceeded(
                f"a gate of degree {2 * len(g)} in {c.n} variables may have {bound} terms (cap {max_terms})"
            )
    return c.expand().is_zero()


@dataclass(frozen=True)
class SZResult:
    verdict: str  # "probably_nonzero" or "consistent_with_zero"
    witness: tuple | None
    value: Fraction | None
    trials: int
    seed: int
    sample_size: int


def schwartz_zippel_test(c: Circuit, trials: int = 10, seed: int = 0) -> SZResult:
    """Evaluate ``Phi`` at seeded random integer points.

    Coordinates are drawn from ``{0, .., S-1}`` with ``S = 2^20 * 2d``, so a
    nonzero circuit of degree ``2d`` vanishes at one point with probability at
    most ``2^-20``.  The test is one-sided: a zero circuit always gives
    ``consistent_with_zero``.
    """
    if trials < 1:
        raise PreconditionError("need at least one trial")
    size = SAMPLE_SCALE * 2 * c.max_degree
    rng = random.Random(seed)
    for t in range(trials):
        point = tuple(rng.randrange(size) for _ in range(c.n))
        v = c.evaluate(point)
        if v != 0:
            return SZResult("probably_nonzero", point, v, t + 1, seed, size)
    return SZResult("consistent_with_zero", None, None, trials, seed, size)


@dataclass(frozen=True)
class GatePair:
    j: int
    j2: int
    member: bool
    subset: tuple


@dataclass(frozen=True)
class GateRadicalReport:
    pairs: tuple
    all_confirmed: bool


def gate_radical_report(c: Circuit, budget: Budget | None = None, with_subsets: bool = True) -> GateRadicalReport:
    """For a zero circuit, check ``prod_j Q_{1,j}`` against every ``<Q_{2,j}, Q_{3,j'}>``.

    ``Phi = 0`` makes the first gate equal to minus the sum of the other two,
    which lies in every such ideal, so each pair must be confirmed.  With
    ``with_subsets`` a subset of at most four first-gate factors whose
    product is already in the radical is recorded per pair.
    """
    if len(c.gates) != 3:
        raise PreconditionError("the report needs exactly three gates")
    if not expand_zero_test(c):
        raise PreconditionError("the circuit is not identically zero")
    budget = budget or Budget()
    g1, g2, g3 = c.gates
    f = product([q.to_poly() for q in g1])
    pairs = []
    for j, q2 in enumerate(g2):
        for j2, q3 in enumerate(g3):
            ok = radical_member(f, [q2.to_poly(), q3.to_poly()], budget)
            subset: tuple = ()
            if ok and with_subsets:
                subset = gupta_reduce(g1, q2, q3, budget)
            pairs.append(GatePair(j, j2, ok, subset))
    return GateRadicalReport(tuple(pairs), all(p.member for p in pairs))


@dataclass(frozen=True)
class ReducedCircuit:
    """A circuit in ``delta`` variables and the change of basis behind it.

    ``transform`` is an invertible ``n x n`` matrix ``T``.  With ``y = T x``
    the original circuit at ``x`` equals ``circuit`` at the first ``delta``
    coordinates of ``y``.
    """

    circuit: Circuit
    transform: tuple
    delta: int

    def substitution(self) -> list[MultiPoly]:
        """The first ``delta`` coordinates of ``T x`` as linear polynomials in ``x``."""
        return [LinearForm(tuple(row)).to_poly() for row in self.transform[: self.delta]]

    def pull_back(self) -> MultiPoly:
        """The reduced circuit rewritten in the original variables."""
        return self.circuit.expand().substitute(self.substitution())


def variable_reduction(c: Circuit) -> ReducedCircuit:
    """Rewrite ``c`` in ``Delta = dim MS(all factors)`` variables by an exact change of basis."""
    space = joint_minimal_space(c.factors(), c.n)
    delta = space.dim
    t = linalg.complete_basis(space.rows(), c.n)
    tinv = linalg.inverse(t)
    tinv_t = linalg.transpose(tinv)
    gates = []
    for g in c.gates:
        new = []
        for q in g:
            full = linalg.matmul(linalg.matmul(tinv_t, [list(r) for r in q.gram]), tinv)
            new.append(QuadraticForm(tuple(tuple(r[:delta]) for r in full[:delta])))
        gates.append(tuple(new))
    transform = tuple(tuple(r) for r in t)
    return ReducedCircuit(Circuit(delta, tuple(gates)), transform, delta)


# --------------------------------------------------------------------------
# generators


def _nonzero(qs) -> bool:
    return all(not q.is_zero() for q in qs)


def _product_form(a: LinearForm, b: LinearForm) -> QuadraticForm:
    return QuadraticForm.from_product(a, b)


def random_circuit(n: int, d: int, seed: int, zero: bool = False) -> Circuit:
    """A seeded 3-gate circuit with ``d`` factors per gate.

    Zero circuits come from the identities ``(P+R)(P-R) - P*P + R*R = 0`` and
    ``l1 l2 * l3 l4 - l1 l3 * l2 l4 = 0`` (split over two gates), multiplied
    through by common random factors to reach ``d`` factors per gate; for
    ``d = 1`` the identity ``P + R - (P+R) = 0`` is used.
    """
    if n < 1 or d < 1:
        raise PreconditionError("need n >= 1 and d >= 1")
    rng = random.Random(seed)
    for _ in range(100):
        if not zero:
            gates = tuple(tuple(random_quadratic_form(rng, n) for _ in range(d)) for _ in range(3))
            if all(_nonzero(g) for g in gates):
                return Circuit(n, gates)
            continue
        if d == 1:
            p, r = random_quadratic_form(rng, n), random_quadratic_form(rng, n)
            gates = ((p,), (r,), (-(p + r),))
        else:
            template = rng.choice(("squares", "monomial"))
            if template == "squares":
                p, r = random_quadratic_form(rng, n), random_quadratic_form(rng, n)
                gates = [[p + r, p - r], [-p, p], [r, r]]
            else:
                ls = [random_linear_form(rng, n) for _ in range(4)]
                t = Fraction(rng.randint(1, 4), rng.randint(5, 9))
                g12 = _product_form(ls[0], ls[1])
                g34 = _product_form(ls[2], ls[3])
                g13 = _product_form(ls[0], ls[2])
                g24 = _product_form(ls[1], ls[3])
                gates = [[g12.scale(t), g34], [g12.scale(1 - t), g34], [-g13, g24]]
            for _ in range(d - 2):
                s = random_quadratic_form(rng, n)
                for g in gates:
                    g.append(s)
            gates = tuple(tuple(g) for g in gates)
        if all(_nonzero(g) for g in gates):
            return Circuit(n, gates)
    raise PreconditionError("could not draw a circuit with nonzero factors")
