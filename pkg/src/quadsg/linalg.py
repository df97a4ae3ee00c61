"""Exact dense linear algebra over Q or one quadratic extension.

Matrices are lists of row lists.  Nothing here mutates its arguments.
Entries only need ``+ - * /`` and comparison with 0, so Fractions and
QuadExt values both work.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*m)] if m else []


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = transpose(b)
    out = []
    for row in a:
        out.append([_dot(row, col) for col in bt])
    return out


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [_dot(row, v) for row in a]


def _dot(u, v):
    s = Fraction(0)
    for x, y in zip(u, v):
        if x != 0 and y != 0:
            s = s + x * y
    return s


def rref(m: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns).

    Pivot search scans columns left to right and takes the first row with a
    nonzero entry, so ties break toward the lowest variable index.
    """
    rows = [list(r) for r in m]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c] if not isinstance(rows[r][c], int) else Fraction(1, rows[r][c])
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rank(m: Sequence[Sequence]) -> int:
    return len(rref(m)[1])


def nullspace(m: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Basis of {v : m v = 0}."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    red, pivots = rref(m) if m else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> list | None:
    """One solution x of a x = b, or None if the system is inconsistent."""
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x[p] = row[ncols]
    return x


def inverse(m: Sequence[Sequence]) -> Matrix:
    n = len(m)
    aug = [list(row) + e for row, e in zip(m, identity(n))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def row_space_intersection(u: Sequence[Sequence], v: Sequence[Sequence]) -> Matrix:
    """RREF basis of rowspace(u) ∩ rowspace(v)."""
    if not u or not v:
        return []
    # x u = y v  <=>  [u; -v]^T [x; y] = 0
    stacked = [list(r) for r in u] + [[-x for x in r] for r in v]
    kernel = nullspace(transpose(stacked), len(stacked))
    vecs = []
    for k in kernel:
        coeffs = k[: len(u)]
        vecs.append([_dot(coeffs, col) for col in transpose(u)])
    red, _ = rref(vecs) if vecs else ([], [])
    return red


def complete_basis(rows: Sequence[Sequence], ncols: int) -> Matrix:
    """Extend an RREF row set with unit rows at its non-pivot columns."""
    red, pivots = rref(rows) if rows else ([], [])
    extra = []
    for c in range(ncols):
        if c not in pivots:
            e = [Fraction(0)] * ncols
            e[c] = Fraction(1)
            extra.append(e)
    return red + extra
