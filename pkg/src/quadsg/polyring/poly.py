"""Sparse multivariate polynomials with exact coefficients."""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from ..errors import NotDivisibleError, PreconditionError
from ..scalars import QuadExt, as_fraction
from . import kernels

Monomial = tuple  # exponent vector


def _coerce(c):
    if isinstance(c, QuadExt):
        return c if c.b != 0 else c.a
    return as_fraction(c)


def grevlex_key(e: Monomial) -> tuple:
    """Sort key realising degrevlex: bigger key means bigger monomial."""
    return (sum(e), tuple(-x for x in reversed(e)))


def lex_key(e: Monomial) -> tuple:
    return tuple(e)


ORDER_KEYS = {"degrevlex": grevlex_key, "grevlex": grevlex_key, "lex": lex_key}


def default_names(n: int) -> list[str]:
    return [f"x{i + 1}" for i in range(n)]


class MultiPoly:
    """Immutable sparse polynomial in ``n`` variables.

    ``terms`` maps exponent tuples to nonzero Fraction or QuadExt
    coefficients.
    """

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Monomial, object] | None = None):
        self.n = int(n)
        clean: dict = {}
        if terms:
            for e, c in terms.items():
                e = tuple(int(x) for x in e)
                if len(e) != self.n:
                    raise PreconditionError(f"monomial {e} does not have {self.n} exponents")
                if any(x < 0 for x in e):
                    raise PreconditionError("negative exponent")
                c = _coerce(c)
                if c != 0:
                    clean[e] = clean.get(e, 0) + c
                    if clean[e] == 0:
                        del clean[e]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "MultiPoly":
        p = object.__new__(cls)
        p.n = n
        p._terms = terms
        p._hash = None
        return p

    # --- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "MultiPoly":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c) -> "MultiPoly":
        c = _coerce(c)
        return cls._raw(n, {(0,) * n: c} if c != 0 else {})

    @classmethod
    def one(cls, n: int) -> "MultiPoly":
        return cls.constant(n, 1)

    @classmethod
    def var(cls, i: int, n: int) -> "MultiPoly":
        if not 0 <= i < n:
            raise PreconditionError(f"variable index {i} out of range for n={n}")
        e = [0] * n
        e[i] = 1
        return cls._raw(n, {tuple(e): Fraction(1)})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "MultiPoly":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            c = _coerce(c)
            if c != 0:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return cls._raw(n, terms)

    # --- basic protocol ---------------------------------------------------
    @property
    def terms(self) -> Mapping[Monomial, object]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_term(self):
        return self._terms.get((0,) * self.n, Fraction(0))

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction, QuadExt)):
            return self == MultiPoly.constant(self.n, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # --- arithmetic -------------------------------------------------------
    def _lift(self, other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            if other.n != self.n:
                raise PreconditionError(f"ring mismatch: {self.n} vs {other.n} variables")
            return other
        if isinstance(other, (int, Fraction, QuadExt)) and not isinstance(other, bool):
            return MultiPoly.constant(self.n, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in o._terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v == 0:
                    del out[e]
                else:
                    out[e] = v
        return MultiPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, c) -> "MultiPoly":
        c = _coerce(c)
        if c == 0:
            return MultiPoly.zero(self.n)
        out = {}
        for e, v in self._terms.items():
            w = v * c
            if w != 0:
                out[e] = _coerce(w) if isinstance(w, QuadExt) else w
        return MultiPoly._raw(self.n, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadExt)) and not isinstance(other, bool):
            return self.scale(other)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self._terms or not o._terms:
            return MultiPoly.zero(self.n)
        prod = kernels.poly_mul(self._terms, o._terms)
        return MultiPoly._raw(self.n, {e: _coerce(c) for e, c in prod.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = MultiPoly.one(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # --- structure --------------------------------------------------------
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def variables(self) -> list[int]:
        used = set()
        for e in self._terms:
            used.update(i for i, x in enumerate(e) if x)
        return sorted(used)

    def coeffs_in(self, i: int) -> list["MultiPoly"]:
        """Coefficients of ``x_i^0, x_i^1, ...`` as polynomials free of ``x_i``."""
        d = self.degree_in(i)
        parts: list[dict] = [dict() for _ in range(max(d, 0) + 1)]
        for e, c in self._terms.items():
            k = e[i]
            e2 = e[:i] + (0,) + e[i + 1 :]
            parts[k][e2] = c
        return [MultiPoly._raw(self.n, t) for t in parts]

    def leading_term(self, order: str = "degrevlex") -> tuple[Monomial, object]:
        if not self._terms:
            raise PreconditionError("zero polynomial has no leading term")
        key = ORDER_KEYS[order]
        e = max(self._terms, key=key)
        return e, self._terms[e]

    def coefficients(self) -> list:
        return list(self._terms.values())

    def is_rational(self) -> bool:
        return all(not isinstance(c, QuadExt) for c in self._terms.values())

    # --- evaluation and substitution --------------------------------------
    def evaluate(self, point: Sequence):
        if len(point) != self.n:
            raise PreconditionError("point has wrong dimension")
        total = Fraction(0)
        for e, c in self._terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x**k
            total = total + v
        return total

    def substitute(self, images: Sequence["MultiPoly"]) -> "MultiPoly":
        """Ring homomorphism sending ``x_i`` to ``images[i]`` (all in one ring)."""
        if len(images) != self.n:
            raise PreconditionError("need one image per variable")
        if self.n == 0:
            return self
        m = images[0].n
        powers: list[list[MultiPoly]] = [[MultiPoly.one(m)] for _ in range(self.n)]

        def power(i: int, k: int) -> MultiPoly:
            lst = powers[i]
            while len(lst) <= k:
                lst.append(lst[-1] * images[i])
            return lst[k]

        acc: dict = {}
        for e, c in self._terms.items():
            term = MultiPoly.constant(m, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            for e2, c2 in term._terms.items():
                v = acc.get(e2, 0) + c2
                if v == 0:
                    acc.pop(e2, None)
                else:
                    acc[e2] = v
        return MultiPoly._raw(m, {e: _coerce(c) for e, c in acc.items() if c != 0})

    def extend(self, k: int) -> "MultiPoly":
        """Embed into a ring with ``k`` extra trailing variables."""
        pad = (0,) * k
        return MultiPoly._raw(self.n + k, {e + pad: c for e, c in self._terms.items()})

    def restrict_vars(self, keep: Sequence[int]) -> "MultiPoly":
        """Re-index into the variables ``keep`` (all others must be absent)."""
        pos = {v: i for i, v in enumerate(keep)}
        out = {}
        for e, c in self._terms.items():
            new = [0] * len(keep)
            for i, x in enumerate(e):
                if x:
                    if i not in pos:
                        raise PreconditionError(f"variable {i} is present")
                    new[pos[i]] = x
            out[tuple(new)] = c
        return MultiPoly._raw(len(keep), out)

    # --- division ---------------------------------------------------------
    def exact_divide(self, g: "MultiPoly") -> "MultiPoly":
        """Quotient ``self / g``; raises NotDivisibleError when g does not divide."""
        g = self._lift(g)
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        ge, gc = g.leading_term("degrevlex")
        rem = dict(self._terms)
        quo: dict = {}
        key = grevlex_key
        while rem:
            e = max(rem, key=key)
            if any(a < b for a, b in zip(e, ge)):
                raise NotDivisibleError("divisor does not divide")
            qe = tuple(a - b for a, b in zip(e, ge))
            qc = rem[e] / gc
            quo[qe] = qc
            for e2, c2 in g._terms.items():
                t = tuple(a + b for a, b in zip(qe, e2))
                v = rem.get(t, 0) - qc * c2
                if v == 0:
                    rem.pop(t, None)
                else:
                    rem[t] = v
        return MultiPoly(self.n, quo)

    def divides(self, f: "MultiPoly") -> bool:
        try:
            f.exact_divide(self)
        except NotDivisibleError:
            return False
        return True

    # --- display ----------------------------------------------------------
    def to_str(self, names: Sequence[str] | None = None) -> str:
        names = list(names) if names else default_names(self.n)
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, key=grevlex_key, reverse=True):
            c = self._terms[e]
            mono = "*".join(
                (names[i] if k == 1 else f"{names[i]}^{k}") for i, k in enumerate(e) if k
            )
            if isinstance(c, QuadExt):
                cs = f"({c})"
            else:
                cs = str(c)
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"MultiPoly({self.n}, {self.to_str()!r})"


def product(polys: Iterable[MultiPoly], n: int | None = None) -> MultiPoly:
    polys = list(polys)
    if not polys:
        if n is None:
            raise PreconditionError("empty product needs n")
        return MultiPoly.one(n)
    out = polys[0]
    for p in polys[1:]:
        out = out * p
    return out


def parse_poly(text: str, names: Sequence[str]) -> MultiPoly:
    """Parse a polynomial written in ``names`` using sympy's parser.

    Convenience for tests and the CLI; coefficients must be rational.
    """
    import sympy

    syms = sympy.symbols(list(names))
    expr = sympy.sympify(text, locals=dict(zip(names, syms)))
    poly = sympy.Poly(sympy.expand(expr), *syms, domain="QQ")
    terms = {}
    for mon, c in poly.terms():
        terms[tuple(mon)] = Fraction(int(c.numerator), int(c.denominator))
    return MultiPoly(len(names), terms)
