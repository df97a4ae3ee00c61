"""Sylvester-Gallai style conditions and configuration generators.

Point configurations are lists of pairwise independent vectors (or linear
forms).  A pair "spans a third point" when some other point of the set lies
in the span of the pair.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import linalg
from .errors import PreconditionError, ResourceLimitExceeded
from .polyring.groebner import Budget
from .polyring.poly import product
from .polyring.radical import radical_member
from .qcore import LinearForm, QuadraticForm, proportional, span_dimension
from .structure import gupta_reduce, isotropic_plane, random_linear_form, random_quadratic_form, reducible_members

# --------------------------------------------------------------------------
# linear configurations


def _vectors(points) -> list[list]:
    out = []
    for p in points:
        coeffs = p.coeffs if isinstance(p, LinearForm) else p
        out.append([Fraction(c) for c in coeffs])
    return out


def _check_independent(vecs: list[list]):
    for i, j in combinations(range(len(vecs)), 2):
        if linalg.rank([vecs[i], vecs[j]]) < 2:
            raise PreconditionError(f"points {i} and {j} are not independent")


def config_dimension(points) -> int:
    vecs = _vectors(points)
    return linalg.rank(vecs) if vecs else 0


def _spans_third(vecs, i, j, candidates) -> bool:
    base = linalg.rref([vecs[i], vecs[j]])[0]
    for k in candidates:
        if k in (i, j):
            continue
        if linalg.rank(base + [vecs[k]]) == 2:
            return True
    return False


def check_sg_linear(points) -> bool:
    """True iff every pair of points spans a third point of the set."""
    vecs = _vectors(points)
    if len(vecs) < 3:
        raise PreconditionError("need at least three points")
    _check_independent(vecs)
    everyone = range(len(vecs))
    return all(_spans_third(vecs, i, j, everyone) for i, j in combinations(everyone, 2))


def sg_partner_counts(points) -> list[int]:
    """For each point, the number of partners with which it spans a third point."""
    vecs = _vectors(points)
    m = len(vecs)
    _check_independent(vecs)
    counts = [0] * m
    everyone = range(m)
    for i, j in combinations(everyone, 2):
        if _spans_third(vecs, i, j, everyone):
            counts[i] += 1
            counts[j] += 1
    return counts


def check_delta_sg(points, normalization: str = "all") -> Fraction:
    """Largest ``delta`` such that every point has ``delta*m`` good partners.

    A partner ``j`` of point ``i`` is good when the span of the two contains a
    third point.  With ``normalization="all"`` the count is divided by the
    number of points ``m``; with ``"others"`` it is divided by ``m - 1``, the
    number of possible partners, so that a configuration in which every
    pair is good scores exactly 1.
    """
    vecs = _vectors(points)
    m = len(vecs)
    if m < 2:
        raise PreconditionError("need at least two points")
    denom = {"all": m, "others": m - 1}.get(normalization)
    if denom is None:
        raise PreconditionError(f"unknown normalization {normalization!r}")
    return Fraction(min(sg_partner_counts(points)), denom)


def robust_sg_bound(delta: Fraction) -> Fraction:
    """Dimension bound ``12/delta + 1`` for delta-SG configurations."""
    if delta <= 0:
        raise PreconditionError("the bound needs delta > 0")
    return 12 / Fraction(delta) + 1


def check_ek(t1, t2, t3) -> bool:
    """True iff every pair of points from two different sets spans a point of the third."""
    sets = [_vectors(t) for t in (t1, t2, t3)]
    allv = [v for s in sets for v in s]
    _check_independent(allv)
    offsets = [0, len(sets[0]), len(sets[0]) + len(sets[1])]
    for a, b in ((0, 1), (0, 2), (1, 2)):
        c = 3 - a - b
        third = list(range(offsets[c], offsets[c] + len(sets[c])))
        for i in range(len(sets[a])):
            for j in range(len(sets[b])):
                if not _spans_third(allv, offsets[a] + i, offsets[b] + j, third):
                    return False
    return True


# --------------------------------------------------------------------------
# generators


def _rng_vector(rng: random.Random, n: int, bound: int = 9) -> list[Fraction]:
    while True:
        v = [Fraction(rng.randint(-bound, bound)) for _ in range(n)]
        if any(v):
            return v


def line_config(m: int, n: int, seed: int) -> list[list[Fraction]]:
    """``m`` pairwise independent points on a random 2-dimensional subspace of Q^n."""
    if m < 3 or n < 2:
        raise PreconditionError("need m >= 3 and n >= 2")
    rng = random.Random(seed)
    while True:
        p, q = _rng_vector(rng, n), _rng_vector(rng, n)
        if linalg.rank([p, q]) == 2:
            break
    pts = [q] + [[a + t * b for a, b in zip(p, q)] for t in range(m - 1)]
    return pts


def root_config(k: int) -> list[list[Fraction]]:
    """The vectors ``e_i - e_j`` (``i < j``) in Q^k."""
    pts = []
    for i, j in combinations(range(k), 2):
        v = [Fraction(0)] * k
        v[i], v[j] = Fraction(1), Fraction(-1)
        pts.append(v)
    return pts


def grid_config(size: int) -> list[list[Fraction]]:
    """Points ``(1, a, b)`` for ``0 <= a, b < size``: an affine grid in the projective plane."""
    return [[Fraction(1), Fraction(a), Fraction(b)] for a in range(size) for b in range(size)]


def ek_config(sizes: tuple[int, int, int], n: int, seed: int) -> tuple[list, list, list]:
    """Three disjoint colour classes of one collinear configuration."""
    total = sum(sizes)
    pts = line_config(max(total, 3), n, seed)
    rng = random.Random(seed + 1)
    rng.shuffle(pts)
    a, b = sizes[0], sizes[0] + sizes[1]
    return pts[:a], pts[a:b], pts[b:total]


# --------------------------------------------------------------------------
# the quadratic condition


@dataclass
class PairResult:
    i: int
    j: int
    member: bool | None
    subset: tuple | None = None
    detail: str = ""


@dataclass
class SGReport:
    """Outcome of checking the radical condition on every pair.

    ``condition_holds`` is None when some pair could not be decided within
    the budget.
    """

    condition_holds: bool | None
    failing_pairs: list = field(default_factory=list)
    undecided_pairs: list = field(default_factory=list)
    per_pair_subsets: dict = field(default_factory=dict)
    span_dimension: int = 0
    hypothesis_ok: bool = True


def _is_square_or_irreducible(q: QuadraticForm) -> bool:
    r = q.gram_rank()
    return r == 1 or r >= 3


def check_main_condition(
    qs: Sequence[QuadraticForm],
    use_gupta: bool = False,
    budget: Budget | None = None,
    strict: bool = False,
) -> SGReport:
    """Check ``prod_{k != i,j} Q_k`` in the radical of ``<Q_i, Q_j>`` for all pairs.

    The forms must be pairwise independent.  Forms that are neither
    irreducible nor squares fall outside the hypothesis of the dimension
    theorem; they are allowed (and flagged in ``hypothesis_ok``) unless
    ``strict`` is set.
    """
    qs = list(qs)
    m = len(qs)
    if m < 3:
        raise PreconditionError("need at least three forms")
    for i, j in combinations(range(m), 2):
        if proportional(qs[i], qs[j]):
            raise PreconditionError(f"forms {i} and {j} are linearly dependent")
    hyp = all(_is_square_or_irreducible(q) for q in qs)
    if strict and not hyp:
        raise PreconditionError("every form must be irreducible or a square")
    budget = budget or Budget()
    polys = [q.to_poly() for q in qs]
    report = SGReport(None, span_dimension=span_dimension(qs), hypothesis_ok=hyp)
    for i, j in combinations(range(m), 2):
        rest = [polys[k] for k in range(m) if k not in (i, j)]
        try:
            ok = radical_member(product(rest), [polys[i], polys[j]], budget)
        except ResourceLimitExceeded as exc:
            report.undecided_pairs.append(PairResult(i, j, None, detail=str(exc)))
            continue
        if not ok:
            report.failing_pairs.append(
                PairResult(i, j, False, detail="product of the others is not in the radical")
            )
            continue
        if use_gupta:
            others = [k for k in range(m) if k not in (i, j)]
            sub = gupta_reduce([qs[k] for k in others], qs[i], qs[j], budget)
            report.per_pair_subsets[(i, j)] = tuple(others[s] for s in sub)
    if report.failing_pairs:
        report.condition_holds = False
    elif report.undecided_pairs:
        report.condition_holds = None
    else:
        report.condition_holds = True
    return report


# --------------------------------------------------------------------------
# Q_o-dominated families


@dataclass(frozen=True)
class QoDominatedSet:
    """Forms ``Q_o + a_j*b_j`` (``first``) and forms ``P_i`` (``second``).

    ``clauses`` maps each defining clause to "verified", "targeted" or
    "not targeted":

    1. the whole set satisfies the pairwise radical condition;
    2. ``m1 > 5*m2 + 2``;
    3. every ``Q_j - Q_o`` is a product of two linear forms;
    4. no nontrivial combination of ``P_i`` and ``Q_o`` is reducible;
    5. at most ``m2`` forms share a common isotropic plane with ``Q_o``.
    """

    q_o: QuadraticForm
    first: tuple
    second: tuple
    clauses: dict
    seed: int

    @property
    def forms(self) -> tuple:
        return self.first + self.second


def make_qo_dominated(
    q_o: QuadraticForm,
    m1: int,
    m2: int,
    seed: int,
    max_tries: int = 200,
    verify_plane_clause: bool = True,
) -> QoDominatedSet:
    """Draw a family built around ``Q_o`` and verify what can be verified exactly."""
    if m1 <= 5 * m2 + 2:
        raise PreconditionError("need m1 > 5*m2 + 2")
    if q_o.gram_rank() < 3:
        raise PreconditionError("Q_o must be irreducible")
    n = q_o.n
    rng = random.Random(seed)
    first: list[QuadraticForm] = []
    tries = 0
    while len(first) < m1:
        tries += 1
        if tries > max_tries:
            raise PreconditionError("could not draw enough Q_o + a*b forms")
        a, b = random_linear_form(rng, n), random_linear_form(rng, n)
        q = q_o + QuadraticForm.from_product(a, b)
        if q.gram_rank() < 3 or any(proportional(q, p) for p in first + [q_o]):
            continue
        first.append(q)
    second: list[QuadraticForm] = []
    tries = 0
    while len(second) < m2:
        tries += 1
        if tries > max_tries:
            raise PreconditionError("could not draw forms with no reducible combination with Q_o")
        p = random_quadratic_form(rng, n)
        if p.gram_rank() < 3 or any(proportional(p, r) for r in first + second + [q_o]):
            continue
        if reducible_members(p, q_o).exists:
            continue
        second.append(p)

    clauses = {
        1: "not targeted",
        2: "verified",
        3: "verified" if all((q - q_o).gram_rank() <= 2 for q in first) else "failed",
        4: "verified" if all(not reducible_members(p, q_o).exists for p in second) else "failed",
    }
    if verify_plane_clause:
        sharing = sum(1 for q in first + second if isotropic_plane([q, q_o]) is not None)
        clauses[5] = "verified" if sharing <= m2 else "failed"
    else:
        clauses[5] = "targeted"
    return QoDominatedSet(q_o, tuple(first), tuple(second), clauses, seed)
