"""Pure-Python polynomial kernels.

This module and the compiled ``_kernels`` extension expose the same
functions with the same results; ``quadsg.polyring.kernels`` picks one at
import time.

Packed monomials
----------------
The Groebner engine stores a monomial as one Python int ``key`` whose
integer order is the monomial order and for which multiplication of
monomials is addition of keys.  Exponents live in fields of ``W`` bits.

* degrevlex:  ``key = deg << (W*n) - E``
* lex:        ``key = E'`` (fields in reverse so x1 is most significant)

where ``E`` packs exponent i into bits ``[W*i, W*i+W)``.  ``expo(key)``
recovers the field-packed exponents (``(-key) & mask`` for degrevlex, the
key itself for lex) and divisibility of packed exponents is the guard-bit
test ``((Eb | guard) - Ea) & guard == guard``.

Engine polynomials are two parallel lists ``(mons, coefs)`` sorted by
decreasing key, with nonzero Python-int coefficients.
"""

from __future__ import annotations

from math import gcd

BACKEND = "python"


def poly_mul(ta: dict, tb: dict) -> dict:
    """Product of two sparse polynomials given as {exponent tuple: coeff}."""
    if len(ta) < len(tb):
        ta, tb = tb, ta
    out: dict = {}
    get = out.get
    items_b = list(tb.items())
    for ea, ca in ta.items():
        for eb, cb in items_b:
            e = tuple([x + y for x, y in zip(ea, eb)])
            v = get(e)
            if v is None:
                out[e] = ca * cb
            else:
                out[e] = v + ca * cb
    return {e: c for e, c in out.items() if c != 0}


def content(coefs) -> int:
    g = 0
    for c in coefs:
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def primitive(coefs: list) -> list:
    """Divide by the content and make the leading coefficient positive."""
    if not coefs:
        return coefs
    g = content(coefs)
    if coefs[0] < 0:
        g = -g
    if g == 1:
        return coefs
    return [c // g for c in coefs]


def combine(am, ac, astart, amul, bm, bc, bstart, bshift, bmul):
    """Return ``amul*a[astart:] - bmul*x^bshift*b[bstart:]`` as merged lists."""
    om: list = []
    oc: list = []
    i, j = astart, bstart
    la, lb = len(am), len(bm)
    while i < la and j < lb:
        ka = am[i]
        kb = bm[j] + bshift
        if ka > kb:
            om.append(ka)
            oc.append(amul * ac[i])
            i += 1
        elif ka < kb:
            om.append(kb)
            oc.append(-bmul * bc[j])
            j += 1
        else:
            v = amul * ac[i] - bmul * bc[j]
            if v:
                om.append(ka)
                oc.append(v)
            i += 1
            j += 1
    while i < la:
        om.append(am[i])
        oc.append(amul * ac[i])
        i += 1
    while j < lb:
        om.append(bm[j] + bshift)
        oc.append(-bmul * bc[j])
        j += 1
    return om, oc


def spoly(fm, fc, gm, gc, lcm_key):
    """Fraction-free S-polynomial of two engine polynomials."""
    a, b = gc[0], fc[0]
    h = gcd(a, b)
    fshift = lcm_key - fm[0]
    if fshift:
        fm = [k + fshift for k in fm]
    return combine(fm, fc, 1, a // h, gm, gc, 1, lcm_key - gm[0], b // h)


def normal_form(pm, pc, basis, neg, mask, guard, max_terms):
    """Fully reduce ``(pm, pc)`` by ``basis``; return a primitive remainder.

    ``basis`` is a sequence of ``(lead_key, lead_expo, mons, coefs)`` with
    positive leading coefficients.  The remainder is defined up to a positive
    rational factor.  Raises ``OverflowError`` when the running term count
    exceeds ``max_terms``.
    """
    rm: list = []
    rc: list = []
    i = 0
    steps = 0
    while i < len(pm):
        t = pm[i]
        e = ((-t) & mask) if neg else t
        eg = e | guard
        found = None
        for g in basis:
            if ((eg - g[1]) & guard) == guard:
                found = g
                break
        if found is None:
            rm.append(t)
            rc.append(pc[i])
            i += 1
            continue
        c = pc[i]
        gm, gcf = found[2], found[3]
        lc = gcf[0]
        h = gcd(c, lc)
        a = lc // h
        b = c // h
        pm, pc = combine(pm, pc, i + 1, a, gm, gcf, 1, t - found[0], b)
        i = 0
        if a != 1:
            rc = [a * x for x in rc]
        if len(pm) + len(rm) > max_terms:
            raise OverflowError("term budget exceeded during reduction")
        steps += 1
        if steps & 15 == 0:
            g = gcd(content(rc), content(pc))
            if g > 1:
                rc = [x // g for x in rc]
                pc = [x // g for x in pc]
    return rm, primitive(rc)
