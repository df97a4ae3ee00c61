"""When does a product of quadratics vanish wherever two quadratics do?

Given quadratic forms ``A``, ``B`` and ``Q_1..Q_m`` with ``prod Q_k`` in the
radical of ``<A, B>``, one of three things happens:

(i)   some ``Q_k`` is a linear combination of ``A`` and ``B``;
(ii)  some nontrivial combination ``alpha*A + beta*B`` factors as ``c*d``;
(iii) ``A`` and ``B`` both lie in an ideal ``<a, b>`` of two linear forms.

This module decides each condition exactly and returns witnesses that can be
re-checked by direct computation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import linalg
from . import univariate as up
from .errors import PreconditionError, ResourceLimitExceeded
from .polyring.factor import factor_gram
from .polyring.groebner import Budget, groebner
from .polyring.poly import MultiPoly, product
from .polyring.radical import radical_member
from .qcore import LinearForm, LinearSpace, QuadraticForm, in_span, joint_minimal_space, minimal_space, restrict_gram
from .scalars import QuadExt, field_of, is_rational, make

# --------------------------------------------------------------------------
# case (ii): reducible members of the pencil


@dataclass(frozen=True)
class ReducibleWitness:
    """A member ``alpha*A + beta*B`` of Gram rank at most 2.

    ``factors`` is ``(c, d)`` with ``c*d`` equal to the member when the
    factors fit in one quadratic extension.  When the pencil parameter itself
    cannot be written down (a root of an irreducible cubic), ``alpha`` and
    ``beta`` are None and ``certificate`` holds the binary form whose roots
    are the reducible members, as coefficients of
    ``lambda^d, lambda^(d-1)*mu, ..., mu^d``.
    """

    alpha: object
    beta: object
    factors: tuple | None = None
    certificate: tuple | None = None

    def member_gram(self, a: QuadraticForm, b: QuadraticForm) -> list[list]:
        return [
            [_norm(self.alpha * x + self.beta * y) for x, y in zip(ra, rb)]
            for ra, rb in zip(a.gram, b.gram)
        ]

    def verify(self, a: QuadraticForm, b: QuadraticForm) -> bool:
        """Re-check the witness by exact computation."""
        if self.alpha is None:
            return self.certificate is not None and _certificate_is_common_divisor(
                a, b, self.certificate
            )
        if self.alpha == 0 and self.beta == 0:
            return False
        g = self.member_gram(a, b)
        if linalg.rank(g) > 2:
            return False
        if self.factors is None:
            return True
        c, d = self.factors
        return (c * d) == _gram_to_poly(g)


@dataclass(frozen=True)
class ReducibleMembers:
    exists: bool
    witnesses: tuple = ()
    gcd_form: tuple | None = None


def _norm(x):
    return make(x.a, x.b, x.m) if isinstance(x, QuadExt) else x


def _gram_to_poly(g: Sequence[Sequence]) -> MultiPoly:
    n = len(g)
    terms = {}
    for i in range(n):
        for j in range(i, n):
            c = g[i][j]
            if c == 0:
                continue
            e = [0] * n
            e[i] += 1
            e[j] += 1
            terms[tuple(e)] = c if i == j else 2 * c
    return MultiPoly(n, terms)


def _compressed_pencil(a: QuadraticForm, b: QuadraticForm) -> tuple[list, list]:
    """Gram matrices of ``a`` and ``b`` on the pivots of ``MS(a) + MS(b)``.

    Every Gram row lies in the joint minimal space ``M`` with RREF basis
    ``R``; then ``G = R^T H R`` with ``H`` the pivot submatrix, and ranks of
    pencil members are the same for ``G`` and ``H``.
    """
    space = joint_minimal_space([a, b])
    piv = space.pivots()
    ha = [[a.gram[i][j] for j in piv] for i in piv]
    hb = [[b.gram[i][j] for j in piv] for i in piv]
    return ha, hb


def _det3(m) -> list:
    """Determinant of a 3x3 matrix of univariate polynomials."""
    (a, b, c), (d, e, f), (g, h, i) = m
    t1 = up.mul(a, _sub(up.mul(e, i), up.mul(f, h)))
    t2 = up.mul(b, _sub(up.mul(d, i), up.mul(f, g)))
    t3 = up.mul(c, _sub(up.mul(d, h), up.mul(e, g)))
    return _add(_sub(t1, t2), t3)


def _add(p, q):
    n = max(len(p), len(q))
    return up.trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def _sub(p, q):
    return _add(p, [-x for x in q])


def pencil_minor_gcd(a: QuadraticForm, b: QuadraticForm) -> tuple[list, int] | None:
    """gcd of the 3x3 minors of ``lambda*G_A + mu*G_B`` as a binary form.

    The form is returned as ``(f, e)`` meaning ``mu^e * mu^deg(f) * f(lambda/mu)``
    with ``f`` monic and low degree first.  Returns None when every minor
    vanishes identically.  Stops early once the gcd is constant.
    """
    ha, hb = _compressed_pencil(a, b)
    k = len(ha)
    g: list = []
    mu_mult = None
    entries = [[up.trim([hb[i][j], ha[i][j]]) for j in range(k)] for i in range(k)]
    triples = list(combinations(range(k), 3))
    for ri, rows in enumerate(triples):
        for cols in triples[ri:]:
            minor = _det3([[entries[r][c] for c in cols] for r in rows])
            if not minor:
                continue
            e = 3 - up.degree(minor)
            mu_mult = e if mu_mult is None else min(mu_mult, e)
            g = up.gcd(g, minor)
            if len(g) == 1 and mu_mult == 0:
                return g, 0
    if mu_mult is None:
        return None
    return g, mu_mult


def _binary_coeffs(f: list, e: int) -> tuple:
    """Coefficients of lambda^d, ..., mu^d for ``mu^e * mu^deg f * f(lambda/mu)``."""
    d = up.degree(f) + e
    coeffs = [Fraction(0)] * (d + 1)
    for j, c in enumerate(f):
        coeffs[d - j] = c  # lambda^j sits at position d - j
    return tuple(coeffs)


def _certificate_is_common_divisor(a: QuadraticForm, b: QuadraticForm, cert: tuple) -> bool:
    res = pencil_minor_gcd(a, b)
    if res is None:
        return True
    return _binary_coeffs(*res) == tuple(cert)


def _normalise_params(lam, mu) -> tuple:
    if lam != 0:
        return Fraction(1), _norm(mu / lam)
    return Fraction(0), Fraction(1)


def _reducible_witness(a: QuadraticForm, b: QuadraticForm, alpha, beta, cert) -> ReducibleWitness:
    g = [
        [_norm(alpha * x + beta * y) for x, y in zip(ra, rb)] for ra, rb in zip(a.gram, b.gram)
    ]
    if linalg.rank(g) == 0:
        return ReducibleWitness(alpha, beta, None, cert)
    pair = factor_gram(g)
    if pair is None:
        return ReducibleWitness(alpha, beta, None, cert)
    c, d = pair
    return ReducibleWitness(alpha, beta, (LinearForm(tuple(c)), LinearForm(tuple(d))), None)


def reducible_members(a: QuadraticForm, b: QuadraticForm) -> ReducibleMembers:
    """Decide whether some nonzero ``alpha*A + beta*B`` has Gram rank at most 2.

    Over an algebraically closed field such a member exists exactly when all
    3x3 minors of the pencil vanish identically or their gcd (a binary form)
    is nonconstant.  Witnesses are the roots of that gcd that lie in Q or
    in one quadratic extension; other roots are reported through the gcd
    form itself.
    """
    if a.n != b.n:
        raise PreconditionError("forms live in different rings")
    if a.n < 3:
        wits = tuple(
            _reducible_witness(a, b, al, be, None)
            for al, be in ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
        )
        return ReducibleMembers(True, wits, None)
    res = pencil_minor_gcd(a, b)
    if res is None:
        wits = tuple(
            _reducible_witness(a, b, al, be, None)
            for al, be in ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))
        )
        return ReducibleMembers(True, wits, None)
    f, e = res
    if up.degree(f) <= 0 and e == 0:
        return ReducibleMembers(False, (), _binary_coeffs(f, e))
    cert = _binary_coeffs(f, e)
    params = []
    if e > 0:
        params.append((Fraction(1), Fraction(0)))
    found_roots = up.roots(f)
    for t in found_roots:
        params.append(_normalise_params(t, Fraction(1)))
    wits = [_reducible_witness(a, b, al, be, cert) for al, be in params]
    # roots of irreducible factors of degree >= 3 are not representable
    if len(found_roots) < up.degree(_squarefree(f)):
        wits.append(ReducibleWitness(None, None, None, cert))
    wits.sort(key=_witness_key)
    return ReducibleMembers(True, tuple(wits), cert)


def _squarefree(f: list) -> list:
    d = up.trim([i * c for i, c in enumerate(f)][1:])
    if not d:
        return f
    return up.divmod_poly(f, up.gcd(f, d))[0]


def _witness_key(w: ReducibleWitness):
    if w.alpha is None:
        return (2, ())
    irr = not (is_rational(w.alpha) and is_rational(w.beta))
    if irr:
        return (1, (str(w.alpha), str(w.beta)))
    return (0, (-w.alpha, -w.beta))


# --------------------------------------------------------------------------
# case (iii): a common isotropic plane


@dataclass(frozen=True)
class PlaneWitness:
    """Independent linear forms ``a, b`` with every form in ``<a, b>``.

    ``a`` and ``b`` are None when a plane exists but its coordinates need
    more than one quadratic extension; ``certificate`` then names the chart
    and the Groebner basis of its defining ideal.
    """

    a: LinearForm | None
    b: LinearForm | None
    certificate: tuple | None = None

    def space(self) -> LinearSpace:
        return LinearSpace.span([self.a, self.b])

    def verify(self, forms: Sequence[QuadraticForm]) -> bool:
        if self.a is None:
            return self.certificate is not None
        sp = self.space()
        if sp.dim != 2:
            return False
        return all(_vanishes_on(q.gram, sp) for q in forms)


def _vanishes_on(gram, space: LinearSpace) -> bool:
    return all(x == 0 for row in restrict_gram(gram, space) for x in row)


def _plane(rows: Sequence[Sequence], n: int) -> LinearSpace | None:
    sp = LinearSpace.span([list(r) for r in rows], n)
    return sp if sp.dim == 2 else None


def _witness_from_space(sp: LinearSpace) -> PlaneWitness:
    return PlaneWitness(sp.basis[0], sp.basis[1])


def isotropic_plane(
    forms: Sequence[QuadraticForm], budget: Budget | None = None
) -> PlaneWitness | None:
    """A plane of linear forms ``span{a, b}`` with every form in ``<a, b>``.

    Returns None when no such plane exists over the complex numbers.

    A form of Gram rank at least 5 lies in no such ideal.  A form of Gram
    rank 3 or 4 forces the plane into its minimal space, so the search runs
    in the intersection of those spaces; if every form has rank at most 2
    the plane may be taken inside the sum of the minimal spaces.  Inside
    that base space of dimension ``k`` the planes are covered by the
    ``k*(k-1)/2`` affine charts of the Grassmannian; on each chart the
    vanishing conditions are polynomial equations in at most ``2*(k-2)``
    unknowns, and a Groebner basis decides whether they have a common root.
    """
    if not forms:
        raise PreconditionError("need at least one form")
    n = forms[0].n
    if any(q.n != n for q in forms):
        raise PreconditionError("forms live in different rings")
    if n < 2:
        return None
    nonzero = [q for q in forms if not q.is_zero()]
    ranks = [q.gram_rank() for q in nonzero]
    if any(r >= 5 for r in ranks):
        return None
    high = [q for q, r in zip(nonzero, ranks) if r >= 3]
    if high:
        base = minimal_space(high[0])
        for q in high[1:]:
            base = base.intersect(minimal_space(q))
        if base.dim < 2:
            return None
    else:
        base = joint_minimal_space(nonzero, n) if nonzero else LinearSpace.zero(n)
        if base.dim < 2:
            rows = linalg.complete_basis(base.rows(), n)[:2]
            base = LinearSpace.span(rows, n)
    grams = [q.gram for q in nonzero]

    def works(sp: LinearSpace | None) -> bool:
        return sp is not None and all(_vanishes_on(g, sp) for g in grams)

    if base.dim == 2:
        return _witness_from_space(base) if works(base) else None

    # fast path: planes spanned by two basis vectors of the base space
    brows = base.rows()
    for i, j in combinations(range(len(brows)), 2):
        sp = _plane([brows[i], brows[j]], n)
        if works(sp):
            return _witness_from_space(sp)

    return _chart_search(grams, base, n, budget or Budget())


def _chart_search(grams, base: LinearSpace, n: int, budget: Budget) -> PlaneWitness | None:
    k = base.dim
    t = linalg.complete_basis(base.rows(), n)  # first k rows span the base space
    t_inv = linalg.inverse(t)
    # y = T x, so Q(x) = y^T (T^-T G T^-1) y
    ys = [linalg.matmul(linalg.transpose(t_inv), linalg.matmul(g, t_inv)) for g in grams]
    for p, q in combinations(range(k), 2):
        s_idx = [j for j in range(p + 1, k) if j != q]
        t_idx = [j for j in range(q + 1, k)]
        r = len(s_idx) + len(t_idx)
        eqs = _chart_equations(ys, n, p, q, s_idx, t_idx, r)
        eqs = [e for e in eqs if not e.is_zero()]
        if any(e.is_constant() for e in eqs):
            continue
        if eqs:
            gb = groebner(eqs, "degrevlex", budget)
            if gb.is_unit():
                continue
        # the chart contains a plane; try to write one down
        values = _solve_system(eqs, r, budget) if eqs else [Fraction(0)] * r
        if values is None:
            lex = groebner(eqs, "lex", budget)
            return PlaneWitness(
                None, None, (f"chart {p},{q}", tuple(g.to_str() for g in lex.gens))
            )
        row1 = [Fraction(0)] * k
        row2 = [Fraction(0)] * k
        row1[p] = Fraction(1)
        row2[q] = Fraction(1)
        for j, v in zip(s_idx, values[: len(s_idx)]):
            row1[j] = v
        for j, v in zip(t_idx, values[len(s_idx) :]):
            row2[j] = v
        a = [_norm(sum((row1[j] * t[j][c] for j in range(k)), Fraction(0))) for c in range(n)]
        b = [_norm(sum((row2[j] * t[j][c] for j in range(k)), Fraction(0))) for c in range(n)]
        sp = _plane([a, b], n)
        if sp is not None and all(_vanishes_on(g, sp) for g in grams):
            return _witness_from_space(sp)
        raise AssertionError("chart solution failed exact verification")  # pragma: no cover
    return None


def _chart_equations(ys, n, p, q, s_idx, t_idx, r) -> list[MultiPoly]:
    """Entries of ``S^T G S`` where ``S`` kills ``y_p, y_q`` on the chart's plane."""
    one = MultiPoly.one(r)
    zero = MultiPoly.zero(r)
    s = [[zero] * n for _ in range(n)]
    for j in range(n):
        if j not in (p, q):
            s[j][j] = one
    for idx, j in enumerate(s_idx):
        s[p][j] = -MultiPoly.var(idx, r)
    for idx, j in enumerate(t_idx):
        s[q][j] = -MultiPoly.var(len(s_idx) + idx, r)
    # y_p = -sum s_j y_j mentions y_q only through s_idx, which excludes q
    eqs = []
    for g in ys:
        gs = [[_poly_dot([g[i][m] for m in range(n)], [s[m][j] for m in range(n)], r) for j in range(n)] for i in range(n)]
        for i in range(n):
            if i in (p, q):
                continue
            for j in range(i, n):
                if j in (p, q):
                    continue
                entry = _poly_dot_cols([s[m][i] for m in range(n)], [gs[m][j] for m in range(n)], r)
                if not entry.is_zero():
                    eqs.append(entry)
    return _dedupe(eqs)


def _poly_dot(scalars, polys, r) -> MultiPoly:
    acc = MultiPoly.zero(r)
    for c, pl in zip(scalars, polys):
        if c != 0 and not pl.is_zero():
            acc = acc + pl.scale(c)
    return acc


def _poly_dot_cols(polys_a, polys_b, r) -> MultiPoly:
    acc = MultiPoly.zero(r)
    for pa, pb in zip(polys_a, polys_b):
        if not pa.is_zero() and not pb.is_zero():
            acc = acc + pa * pb
    return acc


def _dedupe(polys: list[MultiPoly]) -> list[MultiPoly]:
    seen = set()
    out = []
    for p in polys:
        lead = p.leading_term()[1]
        key = p.scale(1 / lead)
        if key not in seen:
            seen.add(key)
            out.append(p)
    return out


_FREE_VALUES = [Fraction(v) for v in (0, 1, -1, 2, -2, 3)]


def _solve_system(eqs: list[MultiPoly], r: int, budget: Budget, max_nodes: int = 400):
    """A common root of ``eqs`` with coordinates in Q or one quadratic extension.

    Works variable by variable from the last (lex-smallest) one, using a lex
    Groebner basis so each step is a univariate problem.  Returns None if
    no representable root is found within ``max_nodes`` search steps.
    """
    lex = groebner(eqs, "lex", budget)
    if lex.is_unit():
        return None
    gens = list(lex.gens)
    nodes = 0

    def substitute(poly: MultiPoly, values: dict) -> MultiPoly:
        images = [
            MultiPoly.constant(r, values[i]) if i in values else MultiPoly.var(i, r) for i in range(r)
        ]
        return poly.substitute(images)

    def univariate(poly: MultiPoly, v: int) -> list:
        coeffs = [Fraction(0)] * (poly.degree_in(v) + 1)
        for e, c in poly.terms.items():
            coeffs[e[v]] = coeffs[e[v]] + c
        return up.trim(coeffs)

    def field(values: dict) -> int | None:
        return field_of(values.values())

    def dfs(v: int, values: dict):
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            return None
        if v < 0:
            if all(substitute(e, values).is_zero() for e in eqs):
                return values
            return None
        relevant = [g for g in gens if all(i >= v for i in g.variables()) and v in g.variables()]
        g_uni: list = []
        for g in relevant:
            g_uni = up.gcd(g_uni, univariate(substitute(g, values), v))
        # constraints with v absent but fully assigned are checked by verification
        if not g_uni:
            candidates = list(_FREE_VALUES)
        elif len(g_uni) == 1:
            return None
        else:
            m = field(values)
            try:
                candidates = up.roots(g_uni, m)
            except ValueError:
                candidates = []
        for c in candidates:
            if m_conflict(values, c):
                continue
            nv = dict(values)
            nv[v] = c
            out = dfs(v - 1, nv)
            if out is not None:
                return out
        return None

    def m_conflict(values: dict, c) -> bool:
        m = field(values)
        return isinstance(c, QuadExt) and m is not None and c.m != m

    sol = dfs(r - 1, {})
    if sol is None:
        return None
    return [sol[i] for i in range(r)]


def common_isotropic_plane(
    a: QuadraticForm, b: QuadraticForm, budget: Budget | None = None
) -> PlaneWitness | None:
    """Independent ``(a, b)`` with both forms vanishing where ``a = b = 0``.

    Returns None when no such plane exists over the complex numbers; raises
    ``ResourceLimitExceeded`` when the Groebner search exceeds its budget.
    """
    return isotropic_plane([a, b], budget)


# --------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class SpanWitness:
    index: int
    alpha: Fraction
    beta: Fraction


@dataclass(frozen=True)
class PlaneCase:
    """Case (iii) together with the optional stronger annotation.

    ``vanishing_k`` is an index ``k`` such that ``Q_k`` also vanishes on
    some common plane of ``A`` and ``B``; ``vanishing_status`` is one of
    "found", "none", "undecided" or "skipped".  When a ``Q_k`` is found the
    plane reported is one that works for it as well.
    """

    plane: PlaneWitness
    vanishing_k: int | None = None
    vanishing_status: str = "skipped"


@dataclass(frozen=True)
class StructureReport:
    case_i: SpanWitness | None
    case_ii: ReducibleMembers | None
    case_iii: PlaneCase | None
    oracle_confirmed: bool | None = None
    notes: tuple = field(default=())

    def cases(self) -> list[str]:
        out = []
        if self.case_i is not None:
            out.append("i")
        if self.case_ii is not None:
            out.append("ii")
        if self.case_iii is not None:
            out.append("iii")
        return out

    def any_case(self) -> bool:
        return bool(self.cases())


def classify(
    a: QuadraticForm,
    b: QuadraticForm,
    qs: Sequence[QuadraticForm],
    check_oracle: bool = True,
    budget: Budget | None = None,
    check_vanishing: bool = True,
) -> StructureReport:
    """Which of the three structural cases hold for ``(A, B, {Q_k})``.

    Each case is decided independently of the others and of the oracle.
    With ``check_oracle`` the radical membership of ``prod Q_k`` in
    ``<A, B>`` is decided as well.
    """
    if not qs:
        raise PreconditionError("need at least one Q_k")
    n = a.n
    if b.n != n or any(q.n != n for q in qs):
        raise PreconditionError("forms live in different rings")
    if linalg.rank([a.upper(), b.upper()]) < 2:
        raise PreconditionError("A and B must be linearly independent")
    budget = budget or Budget()
    notes = []

    case_i = None
    for k, q in enumerate(qs):
        sol = in_span(q, a, b)
        if sol is not None:
            case_i = SpanWitness(k, sol[0], sol[1])
            break

    red = reducible_members(a, b)
    case_ii = red if red.exists else None

    plane = common_isotropic_plane(a, b, budget)
    case_iii = None
    if plane is not None:
        case_iii = _annotate_vanishing(a, b, qs, plane, budget, check_vanishing, notes)

    oracle = None
    if check_oracle:
        prod = product([q.to_poly() for q in qs])
        oracle = radical_member(prod, [a.to_poly(), b.to_poly()], budget)
    return StructureReport(case_i, case_ii, case_iii, oracle, tuple(notes))


def _annotate_vanishing(a, b, qs, plane: PlaneWitness, budget, check: bool, notes) -> PlaneCase:
    if plane.a is not None:
        sp = plane.space()
        for k, q in enumerate(qs):
            if _vanishes_on(q.gram, sp):
                return PlaneCase(plane, k, "found")
    if not check:
        return PlaneCase(plane, None, "skipped")
    undecided = False
    for k, q in enumerate(qs):
        try:
            w = isotropic_plane([a, b, q], budget)
        except ResourceLimitExceeded:
            undecided = True
            continue
        if w is not None:
            return PlaneCase(w if w.a is not None else plane, k, "found")
    if undecided:
        notes.append("vanishing_k search exceeded its budget")
        return PlaneCase(plane, None, "undecided")
    return PlaneCase(plane, None, "none")


# --------------------------------------------------------------------------
# subset reduction


def gupta_reduce(
    qs: Sequence[QuadraticForm],
    a: QuadraticForm,
    b: QuadraticForm,
    budget: Budget | None = None,
    max_size: int = 4,
) -> tuple[int, ...]:
    """Smallest index set ``S`` (size <= 4) with ``prod_{k in S} Q_k`` in the radical.

    Subsets are tried by increasing size and then lexicographically; each
    oracle call is memoised by the product polynomial.  Raises
    ``PreconditionError`` when not even the full product is in the radical.
    """
    budget = budget or Budget()
    gens = [a.to_poly(), b.to_poly()]
    polys = [q.to_poly() for q in qs]
    memo: dict = {}

    def member(idx: tuple) -> bool:
        f = product([polys[i] for i in idx])
        if f not in memo:
            memo[f] = radical_member(f, gens, budget)
        return memo[f]

    for size in range(1, min(max_size, len(qs)) + 1):
        for idx in combinations(range(len(qs)), size):
            if member(idx):
                return idx
    if not member(tuple(range(len(qs)))):
        raise PreconditionError("the product of all Q_k is not in the radical of <A, B>")
    raise AssertionError(  # pragma: no cover - would contradict the subset bound
        f"no subset of size <= {max_size} found"
    )


# --------------------------------------------------------------------------
# instance generators


@dataclass(frozen=True)
class Instance:
    case: str
    a: QuadraticForm
    b: QuadraticForm
    qs: tuple
    expected: object
    seed: int
    n: int
    forms: dict = field(default_factory=dict)


def random_linear_form(rng: random.Random, n: int, bound: int = 5) -> LinearForm:
    while True:
        coeffs = tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, 3)) for _ in range(n))
        if any(coeffs):
            return LinearForm(coeffs)


def random_quadratic_form(rng: random.Random, n: int, bound: int = 5) -> QuadraticForm:
    g = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = Fraction(rng.randint(-bound, bound), rng.randint(1, 2))
            g[i][j] = g[j][i] = v if i == j else v / 2
    return QuadraticForm(tuple(tuple(r) for r in g))


def make_instance(
    case: str,
    n: int,
    seed: int,
    homogenized: bool = False,
    coordinate_forms: bool = False,
) -> Instance:
    """Generate ``(A, B, Qs)`` realising case ii or iii.

    Case ii: ``B = A + a*b`` and ``Qs = {A + a*c, A + b*d}``.  On ``A = B = 0``
    we get ``a*b = 0``, and either factor kills one of the two products.

    Case iii: ``A = a*c + b*d``, ``B = a*e + b*f`` and
    ``Qs = {a^2, b^2, c*f - d*e}``, or ``{a^2 + A, b^2 + B, c*f - d*e}`` with
    ``homogenized``.  With ``coordinate_forms`` the linear forms ``a..f`` are
    the coordinates ``x1..x6``.
    """
    rng = random.Random(seed)
    if case == "ii":
        if n < 2:
            raise PreconditionError("case ii needs n >= 2")
        for _ in range(100):
            A = random_quadratic_form(rng, n)
            la, lb, lc, ld = (random_linear_form(rng, n) for _ in range(4))
            ab = QuadraticForm.from_product(la, lb)
            B = A + ab
            if A.is_zero() or linalg.rank([A.upper(), B.upper()]) < 2:
                continue
            qs = (A + QuadraticForm.from_product(la, lc), A + QuadraticForm.from_product(lb, ld))
            if any(q.is_zero() for q in qs):
                continue
            expected = ReducibleWitness(Fraction(-1), Fraction(1), (la, lb))
            return Instance("ii", A, B, qs, expected, seed, n, {"a": la, "b": lb, "c": lc, "d": ld})
        raise PreconditionError("could not draw a nondegenerate case ii instance")
    if case == "iii":
        if n < 6 and coordinate_forms:
            raise PreconditionError("coordinate forms need n >= 6")
        if n < 2:
            raise PreconditionError("case iii needs n >= 2")
        for _ in range(100):
            if coordinate_forms:
                la, lb, lc, ld, le, lf = (LinearForm.var(i, n) for i in range(6))
            else:
                la, lb, lc, ld, le, lf = (random_linear_form(rng, n) for _ in range(6))
            if LinearSpace.span([la, lb]).dim < 2:
                continue
            A = QuadraticForm.from_product(la, lc) + QuadraticForm.from_product(lb, ld)
            B = QuadraticForm.from_product(la, le) + QuadraticForm.from_product(lb, lf)
            if A.is_zero() or B.is_zero() or linalg.rank([A.upper(), B.upper()]) < 2:
                continue
            q1 = QuadraticForm.from_product(la, la)
            q2 = QuadraticForm.from_product(lb, lb)
            q3 = QuadraticForm.from_product(lc, lf) - QuadraticForm.from_product(ld, le)
            if homogenized:
                q1, q2 = q1 + A, q2 + B
            if any(q.is_zero() for q in (q1, q2, q3)):
                continue
            expected = _witness_from_space(LinearSpace.span([la, lb]))
            forms = {"a": la, "b": lb, "c": lc, "d": ld, "e": le, "f": lf}
            return Instance("iii", A, B, (q1, q2, q3), expected, seed, n, forms)
        raise PreconditionError("could not draw a nondegenerate case iii instance")
    raise PreconditionError(f"unknown case {case!r}")
