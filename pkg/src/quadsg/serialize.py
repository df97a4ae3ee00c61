"""JSON encoding of scalars, forms, spaces and reports.

Rationals are strings ``"p/q"`` (or ``"p"``) so no float ever appears.
Elements of ``Q(sqrt(m))`` are ``{"a": "p/q", "b": "r/s", "m": m}``.
Polynomials are ``{"n": n, "terms": [[exponents, coefficient], ...]}``.
Quadratic forms use the polynomial encoding; on input they may also be
``{"gram": [[...]]}`` or a string in the variables named by the document.
Spaces are ``{"basis": [linear forms]}``.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Any, Sequence

from .errors import PreconditionError
from .polyring.poly import MultiPoly, parse_poly
from .qcore import LinearForm, LinearSpace, QuadraticForm
from .scalars import QuadExt, make

# --------------------------------------------------------------------------
# encoding


def encode_scalar(x) -> Any:
    if isinstance(x, QuadExt):
        return {"a": str(x.a), "b": str(x.b), "m": x.m}
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    raise TypeError(f"not a scalar: {x!r}")


def encode_poly(p: MultiPoly) -> dict:
    terms = sorted(p.terms.items(), key=lambda t: t[0], reverse=True)
    return {"n": p.n, "terms": [[list(e), encode_scalar(c)] for e, c in terms]}


def encode_space(sp: LinearSpace) -> dict:
    return {"basis": [encode_poly(LinearForm(tuple(r)).to_poly()) for r in sp.rows()]}


def encode(obj) -> Any:
    """Recursively turn library objects into JSON-ready values.

    Plain ints (indices, counts) stay JSON integers; Fractions become strings.
    """
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, (Fraction, QuadExt)):
        return encode_scalar(obj)
    if isinstance(obj, MultiPoly):
        return encode_poly(obj)
    if isinstance(obj, (LinearForm, QuadraticForm)):
        return encode_poly(obj.to_poly())
    if isinstance(obj, LinearSpace):
        return encode_space(obj)
    if dataclasses.is_dataclass(obj):
        return {f.name: encode(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {_key(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    raise TypeError(f"cannot encode {type(obj).__name__}")


def _key(k) -> str:
    if isinstance(k, tuple):
        return ",".join(str(x) for x in k)
    return str(k)


# --------------------------------------------------------------------------
# decoding


def decode_scalar(v):
    if isinstance(v, dict):
        try:
            return make(Fraction(v["a"]), Fraction(v["b"]), int(v["m"]))
        except (KeyError, ValueError) as exc:
            raise PreconditionError(f"bad extension scalar {v!r}") from exc
    if isinstance(v, bool) or isinstance(v, float):
        raise PreconditionError(f"scalars must be integers or rational strings, got {v!r}")
    try:
        return Fraction(v)
    except (TypeError, ValueError) as exc:
        raise PreconditionError(f"bad rational {v!r}") from exc


def decode_poly(v, names: Sequence[str] | None = None) -> MultiPoly:
    if isinstance(v, str):
        if not names:
            raise PreconditionError("string polynomials need a 'variables' list")
        try:
            return parse_poly(v, names)
        except Exception as exc:  # sympy raises many parser error types
            raise PreconditionError(f"cannot parse {v!r}: {exc}") from exc
    if not isinstance(v, dict) or "terms" not in v or "n" not in v:
        raise PreconditionError(f"expected a polynomial object, got {v!r}")
    n = int(v["n"])
    terms: dict = {}
    for item in v["terms"]:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise PreconditionError(f"bad term {item!r}")
        e, c = item
        e = tuple(int(x) for x in e)
        c = decode_scalar(c)
        terms[e] = terms[e] + c if e in terms else c
    return MultiPoly(n, terms)


def decode_quadratic(v, names: Sequence[str] | None = None) -> QuadraticForm:
    if isinstance(v, dict) and "gram" in v:
        g = [[decode_scalar(x) for x in row] for row in v["gram"]]
        try:
            return QuadraticForm(tuple(tuple(r) for r in g))
        except ValueError as exc:
            raise PreconditionError(str(exc)) from exc
    p = decode_poly(v, names)
    try:
        return QuadraticForm.from_poly(p)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from exc


def decode_linear(v, names: Sequence[str] | None = None) -> LinearForm:
    if isinstance(v, list):
        return LinearForm(tuple(decode_scalar(x) for x in v))
    try:
        return LinearForm.from_poly(decode_poly(v, names))
    except ValueError as exc:
        raise PreconditionError(str(exc)) from exc


def decode_space(v, n: int, names: Sequence[str] | None = None) -> LinearSpace:
    if not isinstance(v, dict) or "basis" not in v:
        raise PreconditionError("spaces are objects with a 'basis' list")
    return LinearSpace.span([decode_linear(b, names) for b in v["basis"]], n)
