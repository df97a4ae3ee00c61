"""Diagonalisation and factoring of quadratic forms given by Gram matrices.

Everything here works on plain row-list matrices whose entries are
Fractions or elements of one quadratic extension, so the same code factors
rational forms and pencil members with irrational parameters.
"""

from __future__ import annotations

from typing import Sequence

from ..errors import PreconditionError
from ..linalg import rank
from ..scalars import QuadExt, field_of, make, sqrt_in_field, sqrt_rational

Vector = list


def lagrange_decompose(gram: Sequence[Sequence]) -> tuple[list, list]:
    """Split ``x^T G x`` into hyperbolic products and weighted squares.

    Returns ``(products, squares)`` where ``products`` holds ``(c, u, v)``
    meaning ``c*(u.x)*(v.x)`` and ``squares`` holds ``(d, u)`` meaning
    ``d*(u.x)^2``.  Products are preferred whenever the current matrix has
    two zero diagonal entries joined by a nonzero off-diagonal one, because
    they never need a square root.  Each step lowers the Gram rank by the
    number of linear forms it emits, so ``2*len(products) + len(squares)``
    equals the rank.
    """
    g = [list(r) for r in gram]
    n = len(g)
    products: list = []
    squares: list = []
    while True:
        hyp = next(
            (
                (i, j)
                for i in range(n)
                if g[i][i] == 0
                for j in range(i + 1, n)
                if g[j][j] == 0 and g[i][j] != 0
            ),
            None,
        )
        if hyp is not None:
            i, j = hyp
            gij = g[i][j]
            ri, rj = list(g[i]), list(g[j])
            products.append((2 / gij, ri, rj))
            inv = 1 / gij
            for r in range(n):
                for c in range(n):
                    delta = ri[r] * rj[c] + rj[r] * ri[c]
                    if delta != 0:
                        g[r][c] = g[r][c] - inv * delta
            continue
        i = next((i for i in range(n) if g[i][i] != 0), None)
        if i is None:
            # a symmetric matrix with zero diagonal and no hyperbolic pair is zero
            return products, squares
        gii = g[i][i]
        ri = list(g[i])
        squares.append((1 / gii, ri))
        inv = 1 / gii
        for r in range(n):
            if ri[r] == 0:
                continue
            for c in range(n):
                if ri[c] != 0:
                    g[r][c] = g[r][c] - inv * ri[r] * ri[c]


def _sqrt(x, m):
    """Square root of ``x`` inside Q(sqrt(m)); a fresh extension only if m is None."""
    if m is None and not isinstance(x, QuadExt):
        return sqrt_rational(x)
    return sqrt_in_field(x, m)


def _ext_of(x) -> int | None:
    return x.m if isinstance(x, QuadExt) and x.b != 0 else None


def pair_squares(squares: list, base_m: int | None) -> list | None:
    """Combine weighted squares two at a time into products of linear forms.

    ``d1*u^2 + d2*v^2 = d1*(u + s v)*(u - s v)`` with ``s^2 = -d2/d1``.
    The pairing is chosen to maximise the number of rational pairs and then
    to keep all irrational pairs in as few extensions as possible.  Returns
    a list of ``(u_coeffs, v_coeffs)`` or None when a pair would need a
    second extension on top of ``base_m``.
    """
    k = len(squares)
    if k == 0:
        return []
    best = None
    best_score = None
    for matching, single in _matchings(list(range(k))):
        roots = []
        ok = True
        for a, b in matching:
            ratio = -squares[b][0] / squares[a][0]
            s = _sqrt(ratio, base_m)
            if s is None:
                ok = False
                break
            roots.append(s)
        if not ok:
            continue
        exts = {_ext_of(s) for s in roots} - {None}
        if base_m is not None:
            exts.discard(base_m)
        score = (sum(1 for s in roots if _ext_of(s) is not None), len(exts))
        if best_score is None or score < best_score:
            best, best_score = (matching, single, roots), score
            if score == (0, 0):
                break
    if best is None:
        return None
    matching, single, roots = best
    out = []
    for (a, b), s in zip(matching, roots):
        d1, u = squares[a]
        _, v = squares[b]
        plus = [x + s * y for x, y in zip(u, v)]
        minus = [x - s * y for x, y in zip(u, v)]
        out.append(([d1 * x for x in plus], minus))
    if single is not None:
        d, u = squares[single]
        out.append(([d * x for x in u], list(u)))
    return out


def _matchings(items: list):
    """All ways to pair up ``items`` (one left over when the count is odd)."""
    if len(items) % 2:
        for idx in range(len(items)):
            rest = items[:idx] + items[idx + 1 :]
            for m, _ in _matchings(rest):
                yield m, items[idx]
        return
    if not items:
        yield [], None
        return
    first = items[0]
    for idx in range(1, len(items)):
        rest = items[1:idx] + items[idx + 1 :]
        for m, _ in _matchings(rest):
            yield [(first, items[idx])] + m, None


def representation_pairs(gram: Sequence[Sequence]) -> list | None:
    """Pairs of coefficient vectors ``(a, b)`` with ``sum a.x * b.x == x^T G x``.

    Uses exactly ``ceil(rank/2)`` pairs.  Returns None only when the entries
    already live in an extension and a pair would need a second one.
    """
    base_m = field_of(x for row in gram for x in row)
    products, squares = lagrange_decompose(gram)
    out = [([c * x for x in u], list(v)) for c, u, v in products]
    paired = pair_squares(squares, base_m)
    if paired is None:
        return None
    return out + paired


def monic_pair(a: Vector, b: Vector) -> tuple[Vector, Vector]:
    """Rescale so the first nonzero coefficient of ``a`` is 1, keeping ``a*b``."""
    lead = next((x for x in a if x != 0), None)
    if lead is None or lead == 1:
        return list(a), list(b)
    inv = 1 / lead
    return [_norm(x * inv) for x in a], [_norm(x * lead) for x in b]


def _pivot(v: Vector) -> int:
    return next((i for i, x in enumerate(v) if x != 0), len(v))


def canonical_pair(a: Vector, b: Vector) -> tuple[Vector, Vector]:
    """Put the factor with the earlier leading variable first, then make it monic."""
    a, b = [_norm(x) for x in a], [_norm(x) for x in b]
    pa, pb = _pivot(a), _pivot(b)
    if pb < pa or (pa == pb and _shape_key(b) > _shape_key(a)):
        a, b = b, a
    return monic_pair(a, b)


def _shape_key(v: Vector) -> tuple:
    """Order key of the monic rescaling of ``v``; ties between factors break on it."""
    lead = v[_pivot(v)]
    out = []
    for x in v:
        y = x / lead
        out.append((y.a, y.b) if isinstance(y, QuadExt) else (y, 0))
    return tuple(out)


def _norm(x):
    if isinstance(x, QuadExt):
        return make(x.a, x.b, x.m)
    return x


def factor_gram(gram: Sequence[Sequence]) -> tuple[Vector, Vector] | None:
    """Factor a form of Gram rank 1 or 2 as a product of two linear forms.

    Returns coefficient vectors, rational when possible and otherwise in one
    quadratic extension.  Returns None when the entries already live in an
    extension and the factors would need a second one.
    """
    r = rank(gram)
    if r == 0 or r > 2:
        raise PreconditionError(f"factoring needs Gram rank 1 or 2, got {r}")
    pairs = representation_pairs(gram)
    if pairs is None:
        return None
    ((a, b),) = pairs
    return canonical_pair(a, b)


def factor_rank2(q):
    """Factor a nonzero quadratic form of Gram rank at most 2: ``q == a*b``.

    ``q`` is a ``QuadraticForm`` (or a Gram matrix).  The factors are
    rational when the form splits over Q and otherwise live in the quadratic
    extension fixed by the discriminant.
    """
    from ..qcore import LinearForm

    gram = q.gram if hasattr(q, "gram") else q
    pair = factor_gram([list(r) for r in gram])
    if pair is None:  # only possible for irrational input
        raise PreconditionError("factors need a second quadratic extension")
    a, b = pair
    return LinearForm(tuple(a)), LinearForm(tuple(b))


__all__ = [
    "lagrange_decompose",
    "pair_squares",
    "representation_pairs",
    "factor_gram",
    "factor_rank2",
    "monic_pair",
    "canonical_pair",
]
