"""Resultants with respect to one variable."""

from __future__ import annotations

from ..errors import PreconditionError
from .poly import MultiPoly


def sylvester_matrix(f: MultiPoly, g: MultiPoly, var: int) -> list[list[MultiPoly]]:
    """Sylvester matrix of ``f`` and ``g`` viewed as polynomials in ``x_var``."""
    fc = f.coeffs_in(var)[::-1]  # leading coefficient first
    gc = g.coeffs_in(var)[::-1]
    m, n = len(fc) - 1, len(gc) - 1
    size = m + n
    zero = MultiPoly.zero(f.n)
    rows = []
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def bareiss_det(mat: list[list[MultiPoly]], n: int) -> MultiPoly:
    """Determinant of a square matrix over Q[x] by fraction-free elimination."""
    size = len(mat)
    if size == 0:
        return MultiPoly.one(n)
    a = [list(r) for r in mat]
    sign = 1
    prev = MultiPoly.one(n)
    for k in range(size - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, size) if not a[i][k].is_zero()), None)
            if swap is None:
                return MultiPoly.zero(n)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = a[i][j] * piv - a[i][k] * a[k][j]
                a[i][j] = num.exact_divide(prev) if not num.is_zero() else num
        prev = piv
    det = a[size - 1][size - 1]
    return det if sign == 1 else -det


def _res_2_1(f: MultiPoly, g: MultiPoly, var: int) -> MultiPoly:
    # f = alpha*x^2 + a*x + A0, g = b*x + B0
    A0, a, alpha = f.coeffs_in(var)
    B0, b = g.coeffs_in(var)
    # det [[alpha, a, A0], [b, B0, 0], [0, b, B0]]
    return alpha * B0 * B0 - a * b * B0 + A0 * b * b


def resultant(f: MultiPoly, g: MultiPoly, var: int) -> MultiPoly:
    """``Res_{x_var}(f, g)``, a polynomial free of ``x_var``.

    The degree (2, 1) case uses the closed-form 3x3 determinant; every other
    case expands the Sylvester matrix.
    """
    if f.n != g.n:
        raise PreconditionError("resultant of polynomials in different rings")
    if not 0 <= var < f.n:
        raise PreconditionError(f"variable index {var} out of range")
    df, dg = f.degree_in(var), g.degree_in(var)
    if df <= 0 or dg <= 0:
        raise PreconditionError("both polynomials need positive degree in the variable")
    if (df, dg) == (2, 1):
        return _res_2_1(f, g, var)
    if (df, dg) == (1, 2):
        # Res(g, f) = (-1)^(1*2) Res(f, g)
        return _res_2_1(g, f, var)
    return bareiss_det(sylvester_matrix(f, g, var), f.n)


def share_factor_in(f: MultiPoly, g: MultiPoly, var: int) -> bool:
    """True iff ``f`` and ``g`` share a factor of positive degree in ``x_var``."""
    return resultant(f, g, var).is_zero()
