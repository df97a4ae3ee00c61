"""Buchberger's algorithm over Q.

Pair selection uses the normal strategy (smallest lcm first) and pairs are
pruned with Buchberger's two criteria in the Gebauer-Moeller form.
Polynomials inside the engine are primitive integer polynomials; content is
removed after every reduction, so no rational arithmetic happens in the hot
loop.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm as ilcm
from typing import Sequence

from ..errors import PreconditionError, ResourceLimitExceeded
from . import kernels
from .poly import ORDER_KEYS, MultiPoly

DEFAULT_MAX_PAIRS = 50_000
DEFAULT_MAX_TERMS = 200_000


@dataclass(frozen=True)
class Budget:
    """Resource caps for one Groebner computation."""

    max_pairs: int = DEFAULT_MAX_PAIRS
    max_terms: int = DEFAULT_MAX_TERMS


class _Packer:
    """Packs exponent vectors into order-preserving, additive int keys."""

    def __init__(self, n: int, order: str):
        if order in ("degrevlex", "grevlex"):
            self.neg, self.width = True, 16
        elif order == "lex":
            self.neg, self.width = False, 32
        else:
            raise PreconditionError(f"unknown monomial order {order!r}")
        self.n = n
        w = self.width
        self.mask = (1 << (w * n)) - 1
        self.guard = sum(1 << (w * i + w - 1) for i in range(n))
        self.field = (1 << w) - 1
        self.limit = 1 << (w - 2)

    def pack(self, e: Sequence[int]) -> int:
        w = self.width
        if self.neg:
            packed = 0
            for i, x in enumerate(e):
                packed |= x << (w * i)
            return (sum(e) << (w * self.n)) - packed
        key = 0
        for x in e:
            key = (key << w) | x
        return key

    def expo(self, key: int) -> int:
        return ((-key) & self.mask) if self.neg else key

    def unpack(self, key: int) -> tuple:
        w, f = self.width, self.field
        ex = self.expo(key)
        vals = [(ex >> (w * i)) & f for i in range(self.n)]
        return tuple(vals) if self.neg else tuple(reversed(vals))

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return (((self.expo(b) | g) - self.expo(a)) & g) == g

    def lcm(self, a: int, b: int) -> int:
        ea, eb = self.unpack(a), self.unpack(b)
        e = tuple(max(x, y) for x, y in zip(ea, eb))
        if max(e, default=0) >= self.limit or (self.neg and sum(e) >= self.limit):
            raise ResourceLimitExceeded("exponent range of packed monomials exceeded")
        return self.pack(e)


def _to_engine(p: MultiPoly, packer: _Packer) -> tuple[list, list]:
    if not p.is_rational():
        raise PreconditionError("Groebner bases are computed over Q only")
    den = 1
    for c in p.terms.values():
        den = ilcm(den, c.denominator)
    items = sorted(
        ((packer.pack(e), int(c * den)) for e, c in p.terms.items()), reverse=True
    )
    mons = [k for k, _ in items]
    coefs = kernels.primitive([c for _, c in items])
    return mons, coefs


def _from_engine(mons, coefs, packer: _Packer, n: int) -> MultiPoly:
    lc = coefs[0]
    return MultiPoly(n, {packer.unpack(k): Fraction(c, lc) for k, c in zip(mons, coefs)})


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis with monic generators."""

    gens: tuple[MultiPoly, ...]
    order: str
    n: int
    stats: dict = field(default_factory=dict, compare=False, repr=False)

    def is_unit(self) -> bool:
        """True when the ideal is the whole ring."""
        return len(self.gens) == 1 and self.gens[0].is_constant()

    def reduce(self, f: MultiPoly) -> MultiPoly:
        """Exact normal form of ``f`` (the unique remainder for a Groebner basis)."""
        key = ORDER_KEYS[self.order]
        leads = [g.leading_term(self.order) for g in self.gens]
        rem = dict(f.terms)
        out: dict = {}
        while rem:
            e = max(rem, key=key)
            c = rem[e]
            for g, (ge, gc) in zip(self.gens, leads):
                if all(a >= b for a, b in zip(e, ge)):
                    q = tuple(a - b for a, b in zip(e, ge))
                    k = c / gc
                    for e2, c2 in g.terms.items():
                        t = tuple(a + b for a, b in zip(q, e2))
                        v = rem.get(t, 0) - k * c2
                        if v == 0:
                            rem.pop(t, None)
                        else:
                            rem[t] = v
                    break
            else:
                out[e] = c
                del rem[e]
        return MultiPoly(self.n, out)

    def contains(self, f: MultiPoly, max_terms: int = DEFAULT_MAX_TERMS) -> bool:
        """Ideal membership of ``f``."""
        if f.is_zero():
            return True
        if self.is_unit():
            return True
        packer = _Packer(self.n, self.order)
        basis = _engine_basis(self.gens, packer)
        pm, pc = _to_engine(f, packer)
        try:
            rm, _ = kernels.normal_form(
                pm, pc, basis, packer.neg, packer.mask, packer.guard, max_terms
            )
        except OverflowError as exc:
            raise ResourceLimitExceeded(str(exc)) from None
        return not rm

    def is_groebner(self) -> bool:
        """Self-check: every S-polynomial of basis pairs reduces to zero."""
        packer = _Packer(self.n, self.order)
        basis = _engine_basis(self.gens, packer)
        for i in range(len(basis)):
            for j in range(i + 1, len(basis)):
                lk = packer.lcm(basis[i][0], basis[j][0])
                sm, sc = kernels.spoly(basis[i][2], basis[i][3], basis[j][2], basis[j][3], lk)
                if not sm:
                    continue
                rm, _ = kernels.normal_form(
                    sm, sc, basis, packer.neg, packer.mask, packer.guard, DEFAULT_MAX_TERMS
                )
                if rm:
                    return False
        return True


def _engine_basis(gens, packer):
    out = []
    for g in gens:
        m, c = _to_engine(g, packer)
        out.append((m[0], packer.expo(m[0]), m, c))
    return out


def groebner(
    gens: Sequence[MultiPoly],
    order: str = "degrevlex",
    budget: Budget | None = None,
    stop_on_unit: bool = True,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    The result is deterministic for a given order and input sequence.  When
    ``stop_on_unit`` is set the computation returns ``{1}`` as soon as a
    nonzero constant appears.  Raises ``ResourceLimitExceeded`` when the pair
    queue or a polynomial grows past the budget.
    """
    if not gens:
        raise PreconditionError("groebner needs at least one generator")
    order = "degrevlex" if order == "grevlex" else order
    budget = budget or Budget()
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise PreconditionError("generators live in different rings")
    packer = _Packer(n, order)
    for g in gens:
        for e in g.terms:
            if max(e, default=0) >= packer.limit or (packer.neg and sum(e) >= packer.limit):
                raise ResourceLimitExceeded("exponent range of packed monomials exceeded")

    polys: list[tuple] = []  # (lead key, lead expo, mons, coefs)
    active: list[int] = []
    pairs: list[tuple] = []  # (lcm key, i, j)
    stats = {"pairs_processed": 0, "zero_reductions": 0, "backend": kernels.BACKEND}
    neg, mask, guard = packer.neg, packer.mask, packer.guard

    def nf(m, c):
        try:
            return kernels.normal_form(
                m, c, [polys[i] for i in active], neg, mask, guard, budget.max_terms
            )
        except OverflowError as exc:
            raise ResourceLimitExceeded(str(exc)) from None

    def unit_basis():
        return GroebnerBasis((MultiPoly.one(n),), order, n, stats)

    def add(m, c):
        nonlocal active, pairs
        ih = len(polys)
        polys.append((m[0], packer.expo(m[0]), m, c))
        active, pairs = _update(packer, polys, active, pairs, ih)
        if len(pairs) > budget.max_pairs:
            raise ResourceLimitExceeded(f"pair queue exceeded {budget.max_pairs}")

    for g in gens:
        if g.is_zero():
            continue
        m, c = _to_engine(g, packer)
        if len(m) > budget.max_terms:
            raise ResourceLimitExceeded("generator exceeds the term budget")
        rm, rc = nf(m, c)
        if not rm:
            continue
        if rm[0] == 0 and stop_on_unit:
            return unit_basis()
        add(rm, rc)

    while pairs:
        best = min(pairs)
        pairs.remove(best)
        lk, i, j = best
        stats["pairs_processed"] += 1
        fi, fj = polys[i], polys[j]
        sm, sc = kernels.spoly(fi[2], fi[3], fj[2], fj[3], lk)
        if not sm:
            stats["zero_reductions"] += 1
            continue
        rm, rc = nf(sm, sc)
        if not rm:
            stats["zero_reductions"] += 1
            continue
        if rm[0] == 0 and stop_on_unit:
            return unit_basis()
        add(rm, rc)

    return GroebnerBasis(_reduce_basis(packer, [polys[i] for i in active], n, budget), order, n, stats)


def _update(packer: _Packer, polys, active, pairs, ih):
    """Gebauer-Moeller update: insert ``polys[ih]`` and prune pairs."""
    mh = polys[ih][0]
    divides = packer.divides
    lcm = packer.lcm

    candidates = sorted(active)
    kept = []
    while candidates:
        ig = candidates.pop()
        mg = polys[ig][0]
        lhg = lcm(mh, mg)
        if mh + mg == lhg:
            kept.append((ig, lhg))
            continue
        redundant = any(divides(lcm(mh, polys[ip][0]), lhg) for ip in candidates) or any(
            divides(lcm(mh, polys[ip][0]), lhg) for ip, _ in kept
        )
        if not redundant:
            kept.append((ig, lhg))
    new_pairs = [(lhg, ig, ih) for ig, lhg in kept if mh + polys[ig][0] != lhg]

    survivors = []
    for lk, i, j in pairs:
        if not divides(mh, lk) or lcm(polys[i][0], mh) == lk or lcm(polys[j][0], mh) == lk:
            survivors.append((lk, i, j))
    survivors.extend(new_pairs)

    new_active = [ig for ig in active if not divides(mh, polys[ig][0])]
    new_active.append(ih)
    return new_active, survivors


def _reduce_basis(packer: _Packer, basis, n: int, budget: Budget) -> tuple[MultiPoly, ...]:
    # minimal basis: drop elements whose lead is divisible by another lead
    basis = sorted(basis, key=lambda t: t[0])
    minimal = []
    for p in basis:
        if not any(packer.divides(q[0], p[0]) for q in minimal):
            minimal.append(p)
    # interreduce tails
    reduced = []
    for i, p in enumerate(minimal):
        others = [q for j, q in enumerate(minimal) if j != i]
        try:
            rm, rc = kernels.normal_form(
                p[2], p[3], others, packer.neg, packer.mask, packer.guard, budget.max_terms
            )
        except OverflowError as exc:
            raise ResourceLimitExceeded(str(exc)) from None
        reduced.append((rm, rc))
    out = [_from_engine(m, c, packer, n) for m, c in reduced]
    key = ORDER_KEYS[packer_order(packer)]
    out.sort(key=lambda g: key(g.leading_term(packer_order(packer))[0]), reverse=True)
    return tuple(out)


def packer_order(packer: _Packer) -> str:
    return "degrevlex" if packer.neg else "lex"
