"""Dense univariate polynomials over Q or one quadratic extension.

Polynomials are coefficient lists, lowest degree first, with no trailing
zeros (the zero polynomial is ``[]``).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .scalars import QuadExt, field_of, is_rational, make, rational_sqrt, squarefree_decomposition, to_rational

Poly = list


def trim(p: Sequence) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Sequence) -> int:
    return len(trim(p)) - 1


def _norm(x):
    return make(x.a, x.b, x.m) if isinstance(x, QuadExt) else x


def monic(p: Sequence) -> Poly:
    p = trim(p)
    if not p:
        return p
    inv = 1 / p[-1]
    return [_norm(c * inv) for c in p]


def divmod_poly(a: Sequence, b: Sequence) -> tuple[Poly, Poly]:
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    inv = 1 / b[-1]
    while len(r) >= len(b) and r:
        k = len(r) - len(b)
        c = _norm(r[-1] * inv)
        q[k] = c
        for i, bc in enumerate(b):
            r[k + i] = _norm(r[k + i] - c * bc)
        r = trim(r)
    return trim(q), r


def gcd(a: Sequence, b: Sequence) -> Poly:
    """Monic gcd (``[]`` when both are zero)."""
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    return monic(a)


def evaluate(p: Sequence, x):
    acc = Fraction(0)
    for c in reversed(trim(p)):
        acc = acc * x + c
    return _norm(acc) if isinstance(acc, QuadExt) else acc


def mul(a: Sequence, b: Sequence) -> Poly:
    a, b = trim(a), trim(b)
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return trim([_norm(c) for c in out])


def conjugate(p: Sequence) -> Poly:
    return [c.conjugate() if isinstance(c, QuadExt) else c for c in p]


def rational_factors(p: Sequence) -> list[tuple[Poly, int]]:
    """Factor a rational polynomial over Q into monic irreducibles with multiplicity."""
    import sympy

    p = trim(p)
    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t**i for i, c in enumerate(map(to_rational, p)))
    _, facs = sympy.factor_list(sympy.Poly(expr, t, domain="QQ"))
    out = []
    for f, mult in facs:
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(f.all_coeffs())]
        out.append((monic(coeffs), mult))
    return out


def _quadratic_roots(f: Poly, m: int | None):
    """Roots of the monic quadratic ``f`` lying in Q(sqrt(m)), or in its own field when m is None."""
    c, b, _ = f
    disc = b * b - 4 * c
    r = rational_sqrt(disc)
    if r is not None:
        return [(-b + r) / 2, (-b - r) / 2]
    s, dm = squarefree_decomposition(disc.numerator * disc.denominator)
    if m is not None and dm != m:
        return []
    root = QuadExt(0, Fraction(s, disc.denominator), dm)
    return [_norm(root / 2 - b / 2), _norm(-root / 2 - b / 2)]


def roots(p: Sequence, m: int | None = None) -> list:
    """Distinct roots of ``p`` in Q(sqrt(m)).

    With rational coefficients and ``m is None`` the roots of quadratic
    factors are also returned, each in its own quadratic extension; roots of
    irreducible factors of degree three or more are never returned.  With
    coefficients in Q(sqrt(m)) the search uses the rational norm
    ``p * conj(p)``, so every root inside Q(sqrt(m)) is found.
    """
    p = trim(p)
    if len(p) <= 1:
        return []
    base = field_of(p)
    if base is not None and m is not None and base != m:
        raise ValueError("coefficients and target field disagree")
    if base is not None:
        m = base
        target = mul(p, conjugate(p))
        target = [to_rational(c) for c in target]
    else:
        target = [to_rational(c) for c in p]
    found = []
    for f, _ in rational_factors(target):
        if len(f) == 2:
            cands = [-f[0]]
        elif len(f) == 3:
            cands = _quadratic_roots(f, m)
        else:
            cands = []
        for r in cands:
            if base is not None and evaluate(p, r) != 0:
                continue
            if r not in found:
                found.append(r)
    found.sort(key=lambda r: (not is_rational(r), _sort_key(r)))
    return found


def _sort_key(r):
    if isinstance(r, QuadExt):
        return (r.m, r.a, r.b)
    return (0, r, 0)
