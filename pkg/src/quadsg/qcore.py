"""Linear forms, quadratic forms and spaces of linear forms.

Quadratic forms are stored by their symmetric Gram matrix ``G`` so that
``Q(x) = x^T G x``: the coefficient of ``x_i^2`` is ``G[i][i]`` and the
coefficient of ``x_i x_j`` is ``2*G[i][j]``.  Over an algebraically closed
field the smallest number of products of linear forms summing to ``Q`` is
``ceil(rank(G)/2)``, and the space of linear forms ``Q`` really depends on
is the row space of ``G``.  Ranks do not change under field extension, so
both are computed over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

from . import linalg
from .errors import PreconditionError
from .polyring.factor import canonical_pair, representation_pairs
from .polyring.poly import MultiPoly, parse_poly
from .scalars import QuadExt, as_fraction, is_rational, make


def _scalar(x):
    if isinstance(x, QuadExt):
        return make(x.a, x.b, x.m)
    return as_fraction(x)


# --------------------------------------------------------------------------
# linear forms


@dataclass(frozen=True)
class LinearForm:
    """The linear form ``sum coeffs[i] * x_i``."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_scalar(c) for c in self.coeffs))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @classmethod
    def var(cls, i: int, n: int) -> "LinearForm":
        if not 0 <= i < n:
            raise PreconditionError(f"variable index {i} out of range for n={n}")
        return cls(tuple(Fraction(int(k == i)) for k in range(n)))

    @classmethod
    def zero(cls, n: int) -> "LinearForm":
        return cls((Fraction(0),) * n)

    @classmethod
    def from_poly(cls, p: MultiPoly) -> "LinearForm":
        coeffs = [Fraction(0)] * p.n
        for e, c in p.terms.items():
            if sum(e) != 1:
                raise PreconditionError("not a homogeneous linear polynomial")
            coeffs[e.index(1)] = c
        return cls(tuple(coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(is_rational(c) for c in self.coeffs)

    def pivot(self) -> int:
        """Index of the first nonzero coefficient (``n`` for the zero form)."""
        return next((i for i, c in enumerate(self.coeffs) if c != 0), self.n)

    def canonical(self) -> "LinearForm":
        """Scale so that the first nonzero coefficient is 1."""
        p = self.pivot()
        if p == self.n or self.coeffs[p] == 1:
            return self
        return self.scale(1 / self.coeffs[p])

    def scale(self, c) -> "LinearForm":
        return LinearForm(tuple(x * c for x in self.coeffs))

    def _check(self, other: "LinearForm"):
        if other.n != self.n:
            raise PreconditionError("linear forms in different rings")

    def __add__(self, other: "LinearForm") -> "LinearForm":
        self._check(other)
        return LinearForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        self._check(other)
        return LinearForm(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "LinearForm":
        return LinearForm(tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, LinearForm):
            self._check(other)
            return self.to_poly() * other.to_poly()
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def to_poly(self) -> MultiPoly:
        return MultiPoly.linear(self.coeffs)

    def evaluate(self, point: Sequence):
        total = Fraction(0)
        for c, x in zip(self.coeffs, point):
            if c != 0:
                total = total + c * x
        return total

    def extend(self, k: int) -> "LinearForm":
        return LinearForm(self.coeffs + (Fraction(0),) * k)

    def to_str(self, names: Sequence[str] | None = None) -> str:
        return self.to_poly().to_str(names)

    def __str__(self):
        return self.to_str()


# --------------------------------------------------------------------------
# quadratic forms


def _gram_from_poly(p: MultiPoly) -> list[list]:
    n = p.n
    g = [[Fraction(0)] * n for _ in range(n)]
    for e, c in p.terms.items():
        if sum(e) != 2:
            raise PreconditionError("not a homogeneous quadratic polynomial")
        idx = [i for i, k in enumerate(e) for _ in range(k)]
        i, j = idx
        if i == j:
            g[i][i] = c
        else:
            g[i][j] = g[j][i] = c / 2
    return g


@dataclass(frozen=True)
class QuadraticForm:
    """A homogeneous quadratic ``x^T G x`` with rational symmetric Gram matrix."""

    gram: tuple

    def __post_init__(self):
        rows = tuple(tuple(as_fraction(x) if not isinstance(x, QuadExt) else x for x in r) for r in self.gram)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise PreconditionError("Gram matrix must be square")
            for x in r:
                if isinstance(x, QuadExt):
                    raise PreconditionError("quadratic forms have rational Gram matrices")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise PreconditionError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", rows)

    # construction -----------------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.gram)

    @classmethod
    def zero(cls, n: int) -> "QuadraticForm":
        return cls(tuple((Fraction(0),) * n for _ in range(n)))

    @classmethod
    def from_poly(cls, p: MultiPoly) -> "QuadraticForm":
        if not p.is_rational():
            raise PreconditionError("quadratic forms have rational coefficients")
        return cls(tuple(tuple(r) for r in _gram_from_poly(p)))

    @classmethod
    def from_product(cls, a: LinearForm, b: LinearForm) -> "QuadraticForm":
        return cls.from_poly(a * b)

    @classmethod
    def parse(cls, text: str, names: Sequence[str]) -> "QuadraticForm":
        return cls.from_poly(parse_poly(text, names))

    def to_poly(self) -> MultiPoly:
        n = self.n
        terms = {}
        for i in range(n):
            for j in range(i, n):
                c = self.gram[i][j]
                if c == 0:
                    continue
                e = [0] * n
                e[i] += 1
                e[j] += 1
                terms[tuple(e)] = c if i == j else 2 * c
        return MultiPoly(n, terms)

    # arithmetic -------------------------------------------------------------
    def _check(self, other: "QuadraticForm"):
        if not isinstance(other, QuadraticForm):
            raise TypeError("expected a QuadraticForm")
        if other.n != self.n:
            raise PreconditionError("quadratic forms in different rings")

    def __add__(self, other: "QuadraticForm") -> "QuadraticForm":
        self._check(other)
        return QuadraticForm(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.gram, other.gram))
        )

    def __sub__(self, other: "QuadraticForm") -> "QuadraticForm":
        self._check(other)
        return QuadraticForm(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.gram, other.gram))
        )

    def __neg__(self) -> "QuadraticForm":
        return self.scale(-1)

    def scale(self, c) -> "QuadraticForm":
        c = as_fraction(c)
        return QuadraticForm(tuple(tuple(c * x for x in r) for r in self.gram))

    def __mul__(self, c):
        if isinstance(c, (int, Fraction)) and not isinstance(c, bool):
            return self.scale(c)
        if isinstance(c, QuadraticForm):
            return self.to_poly() * c.to_poly()
        return NotImplemented

    __rmul__ = __mul__

    # structure ---------------------------------------------------------------
    def is_zero(self) -> bool:
        return all(x == 0 for r in self.gram for x in r)

    def evaluate(self, point: Sequence):
        total = Fraction(0)
        n = self.n
        for i in range(n):
            if point[i] == 0:
                continue
            for j in range(n):
                g = self.gram[i][j]
                if g != 0 and point[j] != 0:
                    total = total + g * point[i] * point[j]
        return total

    def gram_rank(self) -> int:
        return linalg.rank(self.gram)

    def rank_s(self) -> int:
        return rank_s(self)

    def minimal_space(self) -> "LinearSpace":
        return minimal_space(self)

    def extend(self, k: int) -> "QuadraticForm":
        """Embed into a ring with ``k`` extra trailing variables."""
        z = (Fraction(0),) * k
        rows = [r + z for r in self.gram] + [(Fraction(0),) * (self.n + k)] * k
        return QuadraticForm(tuple(rows))

    def upper(self) -> list:
        """Upper-triangle entries; a coordinate vector for the form."""
        n = self.n
        return [self.gram[i][j] for i in range(n) for j in range(i, n)]

    def to_str(self, names: Sequence[str] | None = None) -> str:
        return self.to_poly().to_str(names)

    def __str__(self):
        return self.to_str()


# --------------------------------------------------------------------------
# spaces of linear forms


@dataclass(frozen=True)
class LinearSpace:
    """A subspace of linear forms stored by its RREF basis.

    The RREF basis is unique, so two spaces are equal exactly when their
    bases are.  Build instances with :meth:`span`.
    """

    n: int
    basis: tuple

    @classmethod
    def span(cls, forms: Iterable, n: int | None = None) -> "LinearSpace":
        rows = []
        for f in forms:
            coeffs = f.coeffs if isinstance(f, LinearForm) else tuple(f)
            rows.append([_scalar(c) for c in coeffs])
        if n is None:
            if not rows:
                raise PreconditionError("the span of nothing needs n")
            n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise PreconditionError("linear forms in different rings")
        red, _ = linalg.rref(rows) if rows else ([], [])
        return cls(n, tuple(LinearForm(tuple(r)) for r in red))

    @classmethod
    def zero(cls, n: int) -> "LinearSpace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "LinearSpace":
        return cls.span([LinearForm.var(i, n) for i in range(n)], n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def rows(self) -> list[list]:
        return [list(f.coeffs) for f in self.basis]

    def pivots(self) -> list[int]:
        return [f.pivot() for f in self.basis]

    def is_rational(self) -> bool:
        return all(f.is_rational() for f in self.basis)

    def contains(self, form) -> bool:
        coeffs = form.coeffs if isinstance(form, LinearForm) else tuple(form)
        if all(c == 0 for c in coeffs):
            return True
        return linalg.rank(self.rows() + [list(coeffs)]) == self.dim

    def __contains__(self, form) -> bool:
        return self.contains(form)

    def is_subspace_of(self, other: "LinearSpace") -> bool:
        return all(other.contains(f) for f in self.basis)

    def __add__(self, other: "LinearSpace") -> "LinearSpace":
        return LinearSpace.span(list(self.basis) + list(other.basis), self.n)

    def intersect(self, other: "LinearSpace") -> "LinearSpace":
        if self.n != other.n:
            raise PreconditionError("spaces in different rings")
        inter = linalg.row_space_intersection(self.rows(), other.rows())
        return LinearSpace.span(inter, self.n)

    def __str__(self):
        return "span{" + ", ".join(str(f) for f in self.basis) + "}"


# --------------------------------------------------------------------------
# operations


def rank_s(q: QuadraticForm) -> int:
    """Smallest number of products of two linear forms summing to ``q``."""
    return (q.gram_rank() + 1) // 2


def minimal_space(q: QuadraticForm) -> LinearSpace:
    """The space of linear forms ``q`` depends on: the row space of its Gram matrix."""
    return LinearSpace.span([list(r) for r in q.gram], q.n)


def joint_minimal_space(forms: Iterable[QuadraticForm], n: int | None = None) -> LinearSpace:
    """Sum of the minimal spaces of ``forms``."""
    rows = []
    for q in forms:
        n = q.n
        rows.extend(list(r) for r in q.gram)
    if n is None:
        raise PreconditionError("empty set of forms needs n")
    return LinearSpace.span(rows, n)


def minimal_representation(q: QuadraticForm) -> list[tuple[LinearForm, LinearForm]]:
    """Exactly ``rank_s(q)`` pairs ``(a, b)`` with ``sum a*b == q``.

    Rational pairs are preferred.  A pair whose factors are irrational lives
    in a single quadratic extension, with the product of the pair rational.
    """
    pairs = representation_pairs([list(r) for r in q.gram])
    assert pairs is not None  # rational input never needs a second extension
    out = []
    for a, b in pairs:
        a, b = canonical_pair(a, b)
        out.append((LinearForm(tuple(a)), LinearForm(tuple(b))))
    return out


def _substitution(space: LinearSpace) -> list[list]:
    """Matrix ``S`` with ``x = S x'`` sending the space's pivot coordinates to 0.

    Pivot coordinate ``p_i`` becomes ``-sum_j v_i[j] x_j`` over the
    non-pivot ``j``; the other coordinates are unchanged.
    """
    n = space.n
    s = [[Fraction(0)] * n for _ in range(n)]
    pivots = space.pivots()
    pivot_set = set(pivots)
    for j in range(n):
        if j not in pivot_set:
            s[j][j] = Fraction(1)
    for row, p in zip(space.rows(), pivots):
        for j in range(n):
            if j not in pivot_set and row[j] != 0:
                s[p][j] = -row[j]
    return s


def restrict_gram(gram: Sequence[Sequence], space: LinearSpace) -> list[list]:
    """Gram matrix of ``Q`` restricted to the zero set of ``space`` (``S^T G S``)."""
    if not space.basis:
        return [list(r) for r in gram]
    s = _substitution(space)
    return linalg.matmul(linalg.transpose(s), linalg.matmul(gram, s))


def restrict(p: Union[QuadraticForm, MultiPoly], space: LinearSpace):
    """``p`` with the forms of ``space`` set to zero.

    The space's RREF pivot coordinates are eliminated; the result stays in
    the same ``n`` variables and never involves a pivot coordinate.
    """
    if space.n != p.n:
        raise PreconditionError("space and polynomial live in different rings")
    if isinstance(p, QuadraticForm):
        if not space.is_rational():
            raise PreconditionError("restrict a QuadraticForm to an irrational space with restrict_gram")
        return QuadraticForm(tuple(tuple(r) for r in restrict_gram(p.gram, space)))
    if not space.basis:
        return p
    n = p.n
    pivots = space.pivots()
    images = [MultiPoly.var(j, n) for j in range(n)]
    for row, piv in zip(space.rows(), pivots):
        coeffs = [Fraction(0)] * n
        for j in range(n):
            if j not in pivots and row[j] != 0:
                coeffs[j] = -row[j]
        images[piv] = MultiPoly.linear(coeffs)
    return p.substitute(images)


def congruent_mod(p, q, space: LinearSpace) -> bool:
    """True iff ``p - q`` lies in the ideal generated by the forms of ``space``."""
    if isinstance(p, QuadraticForm) and isinstance(q, QuadraticForm):
        return restrict(p - q, space).is_zero()
    pp = p.to_poly() if isinstance(p, QuadraticForm) else p
    qq = q.to_poly() if isinstance(q, QuadraticForm) else q
    return restrict(pp - qq, space).is_zero()


def span_dimension(forms: Sequence[QuadraticForm]) -> int:
    """Dimension of the linear span of ``forms`` as vectors of coefficients."""
    if not forms:
        return 0
    return linalg.rank([q.upper() for q in forms])


def in_span(q: QuadraticForm, a: QuadraticForm, b: QuadraticForm) -> tuple | None:
    """``(alpha, beta)`` with ``q == alpha*a + beta*b``, or None."""
    cols = [a.upper(), b.upper()]
    mat = linalg.transpose(cols)
    sol = linalg.solve(mat, q.upper())
    if sol is None:
        return None
    return sol[0], sol[1]


def proportional(a: QuadraticForm, b: QuadraticForm) -> bool:
    return linalg.rank([a.upper(), b.upper()]) < 2


def pairwise_independent(forms: Sequence[QuadraticForm]) -> bool:
    """False iff some two of ``forms`` are proportional (or one is zero)."""
    return not any(proportional(a, b) for a, b in combinations(forms, 2)) and not any(
        q.is_zero() for q in forms
    )


@dataclass(frozen=True)
class SpanSummary:
    dimension: int
    pairwise_independent: bool


def span_ops(forms: Sequence[QuadraticForm]) -> SpanSummary:
    """Dimension and pairwise independence of a set of quadratic forms."""
    return SpanSummary(span_dimension(forms), pairwise_independent(forms))


def quadratic(text: str, names: Sequence[str]) -> QuadraticForm:
    """Shorthand: parse a quadratic form written in ``names``."""
    return QuadraticForm.parse(text, names)


def linear(text: str, names: Sequence[str]) -> LinearForm:
    """Shorthand: parse a linear form written in ``names``."""
    return LinearForm.from_poly(parse_poly(text, names))
