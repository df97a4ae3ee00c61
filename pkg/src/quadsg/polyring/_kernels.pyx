# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled polynomial kernels.  Same contract as ``_kernels_py``."""

from math import gcd

BACKEND = "cython"


def poly_mul(dict ta, dict tb):
    cdef dict out = {}
    cdef list items_b
    cdef tuple ea, eb, e
    cdef Py_ssize_t k, n
    if len(ta) < len(tb):
        ta, tb = tb, ta
    items_b = list(tb.items())
    for ea, ca in ta.items():
        n = len(ea)
        for eb, cb in items_b:
            e = tuple([ea[k] + eb[k] for k in range(n)])
            v = out.get(e)
            if v is None:
                out[e] = ca * cb
            else:
                out[e] = v + ca * cb
    return {e: c for e, c in out.items() if c != 0}


cpdef object content(list coefs):
    cdef object g = 0
    for c in coefs:
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


cpdef list primitive(list coefs):
    if not coefs:
        return coefs
    g = content(coefs)
    if coefs[0] < 0:
        g = -g
    if g == 1:
        return coefs
    return [c // g for c in coefs]


cpdef tuple combine(list am, list ac, Py_ssize_t astart, object amul,
                    list bm, list bc, Py_ssize_t bstart, object bshift,
                    object bmul):
    cdef list om = []
    cdef list oc = []
    cdef Py_ssize_t i = astart, j = bstart
    cdef Py_ssize_t la = len(am), lb = len(bm)
    cdef bint amul_one = amul == 1
    while i < la and j < lb:
        ka = am[i]
        kb = bm[j] + bshift
        if ka > kb:
            om.append(ka)
            oc.append(ac[i] if amul_one else amul * ac[i])
            i += 1
        elif ka < kb:
            om.append(kb)
            oc.append(-bmul * bc[j])
            j += 1
        else:
            v = (ac[i] if amul_one else amul * ac[i]) - bmul * bc[j]
            if v:
                om.append(ka)
                oc.append(v)
            i += 1
            j += 1
    while i < la:
        om.append(am[i])
        oc.append(ac[i] if amul_one else amul * ac[i])
        i += 1
    while j < lb:
        om.append(bm[j] + bshift)
        oc.append(-bmul * bc[j])
        j += 1
    return om, oc


def spoly(list fm, list fc, list gm, list gc, object lcm_key):
    a, b = gc[0], fc[0]
    h = gcd(a, b)
    fshift = lcm_key - fm[0]
    if fshift:
        fm = [k + fshift for k in fm]
    return combine(fm, fc, 1, a // h, gm, gc, 1, lcm_key - gm[0], b // h)


def normal_form(list pm, list pc, list basis, bint neg, object mask,
                object guard, Py_ssize_t max_terms):
    cdef list rm = []
    cdef list rc = []
    cdef Py_ssize_t i = 0, steps = 0, nb = len(basis), k
    cdef tuple g, found
    cdef list gm, gcf
    while i < len(pm):
        t = pm[i]
        e = ((-t) & mask) if neg else t
        eg = e | guard
        found = None
        for k in range(nb):
            g = <tuple>basis[k]
            if ((eg - g[1]) & guard) == guard:
                found = g
                break
        if found is None:
            rm.append(t)
            rc.append(pc[i])
            i += 1
            continue
        c = pc[i]
        gm = <list>found[2]
        gcf = <list>found[3]
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
            gg = gcd(content(rc), content(pc))
            if gg > 1:
                rc = [x // gg for x in rc]
                pc = [x // gg for x in pc]
    return rm, primitive(rc)
