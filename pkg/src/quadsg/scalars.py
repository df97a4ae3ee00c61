"""Exact scalars: rationals (``fractions.Fraction``) and elements of one
quadratic extension Q(sqrt(m)).

Every value flowing through the library is either a ``Fraction`` or a
``QuadExt``.  Arithmetic between a ``QuadExt`` and a rational promotes to
the extension; arithmetic between two extensions with different ``m`` is
refused, because the library never builds towers of extensions.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Union

Rational = Fraction
Scalar = Union[Fraction, "QuadExt"]


def as_fraction(value) -> Fraction:
    """Parse ``value`` (int, Fraction, or a ``"p/q"`` string) into a Fraction.

    Floats are rejected: the library is exact end to end.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


@lru_cache(maxsize=4096)
def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Return ``(s, m)`` with ``n == s*s*m``, ``s > 0`` and ``m`` squarefree.

    The sign of ``n`` is carried by ``m``.
    """
    if n == 0:
        return 0, 0
    from sympy import factorint

    sign = -1 if n < 0 else 1
    s, m = 1, sign
    for p, e in factorint(abs(n)).items():
        s *= p ** (e // 2)
        if e % 2:
            m *= p
    return s, m


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Square root of ``q`` in Q, or None when ``q`` is not a rational square."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


class QuadExt:
    """The number ``a + b*sqrt(m)`` with ``a, b`` rational and ``m`` squarefree.

    Instances are immutable.  Use :func:`make` rather than the constructor when
    the result might be rational; it collapses ``b == 0`` to a ``Fraction``.
    """

    __slots__ = ("a", "b", "m")

    def __init__(self, a, b, m: int):
        if m in (0, 1):
            raise ValueError("m must be a squarefree integer other than 0 and 1")
        object.__setattr__(self, "a", as_fraction(a))
        object.__setattr__(self, "b", as_fraction(b))
        object.__setattr__(self, "m", int(m))

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    # --- coercion helpers -------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.m != self.m:
                raise ValueError(
                    f"cannot mix Q(sqrt({self.m})) and Q(sqrt({other.m}))"
                )
            return other.a, other.b
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Fraction(other), Fraction(0)
        return None

    # --- arithmetic -------------------------------------------------------
    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return make(self.a + c[0], self.b + c[1], self.m)

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return make(self.a - c[0], self.b - c[1], self.m)

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return make(c[0] - self.a, c[1] - self.b, self.m)

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        a, b = c
        return make(self.a * a + self.m * self.b * b, self.a * b + self.b * a, self.m)

    __rmul__ = __mul__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.m)

    def __pos__(self):
        return self

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.m)

    def norm(self) -> Fraction:
        return self.a * self.a - self.m * self.b * self.b

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        a, b = c
        den = a * a - self.m * b * b
        if den == 0:
            raise ZeroDivisionError("division by zero in quadratic extension")
        # (x)(a - b r)/(a^2 - m b^2)
        return make(
            (self.a * a - self.m * self.b * b) / den,
            (self.b * a - self.a * b) / den,
            self.m,
        )

    def __rtruediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadExt(c[0], c[1], self.m) / self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out: Scalar = Fraction(1)
        base: Scalar = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # --- comparisons ------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return self.m == other.m and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.m))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, {self.m})"

    def __str__(self):
        root = "i" if self.m == -1 else f"sqrt({self.m})"
        mag = abs(self.b)
        body = root if mag == 1 else f"{mag}*{root}"
        if self.a == 0:
            return ("-" if self.b < 0 else "") + body
        sign = "-" if self.b < 0 else "+"
        return f"{self.a} {sign} {body}"


def make(a, b, m: int) -> Scalar:
    """Build ``a + b*sqrt(m)``, returning a plain Fraction when ``b == 0``."""
    a, b = as_fraction(a), as_fraction(b)
    if b == 0:
        return a
    return QuadExt(a, b, m)


def is_rational(x) -> bool:
    return not isinstance(x, QuadExt) or x.b == 0


def to_rational(x) -> Fraction:
    if isinstance(x, QuadExt):
        if x.b != 0:
            raise ValueError(f"{x} is not rational")
        return x.a
    return as_fraction(x)


def field_of(values) -> int | None:
    """Return the extension parameter ``m`` shared by ``values`` (None if all rational).

    Raises ``ValueError`` when two different extensions are mixed.
    """
    m = None
    for v in values:
        if isinstance(v, QuadExt) and v.b != 0:
            if m is None:
                m = v.m
            elif m != v.m:
                raise ValueError(f"values live in Q(sqrt({m})) and Q(sqrt({v.m}))")
    return m


def sqrt_rational(q) -> Scalar:
    """Square root of a rational number, in Q or in Q(sqrt(m)) for squarefree m."""
    q = as_fraction(q)
    if q == 0:
        return Fraction(0)
    r = rational_sqrt(q)
    if r is not None:
        return r
    # q = num/den = num*den / den^2
    s, m = squarefree_decomposition(q.numerator * q.denominator)
    return QuadExt(0, Fraction(s, q.denominator), m)


def sqrt_in_field(x, m: int | None = None) -> Scalar | None:
    """Square root of ``x`` inside Q(sqrt(m)) (or inside Q if m is None).

    For rational ``x`` and ``m is None`` the root may land in a fresh quadratic
    extension; use :func:`sqrt_rational` for that.  Returns None when no root
    exists in the requested field.
    """
    if isinstance(x, QuadExt) and x.b != 0:
        m = x.m
        a, b = x.a, x.b
        s = rational_sqrt(a * a - m * b * b)
        if s is None:
            return None
        for c2 in ((a + s) / 2, (a - s) / 2):
            c = rational_sqrt(c2)
            if c:
                return make(c, b / (2 * c), m)
        return None
    q = to_rational(x)
    r = rational_sqrt(q)
    if r is not None:
        return r
    if m is None:
        return None
    # d*sqrt(m) squared is d^2 m
    d = rational_sqrt(q / m)
    if d is not None:
        return QuadExt(0, d, m)
    return None


def is_zero(x) -> bool:
    return x == 0
