# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled reduction kernel; same contract as ``_kernel_py``."""

from math import gcd

BACKEND = "cython"

cdef int _SHRINK_BITS = 384
cdef Py_ssize_t _TICK_EVERY = 256


cdef object _content(dict d):
    cdef object g = 0
    cdef object v
    for v in d.values():
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


cdef void _shrink(dict p, dict rem):
    cdef object g
    cdef object k
    if rem:
        g = gcd(_content(p), _content(rem))
    else:
        g = _content(p)
    if g > 1:
        for k in p:
            p[k] //= g
        for k in rem:
            rem[k] //= g


def make_primitive(dict d):
    if not d:
        return d
    cdef object g = _content(d)
    if d[max(d)] < 0:
        g = -g
    if g != 1:
        return {k: v // g for k, v in d.items()}
    return d


def reduce_poly(dict p, list basis, object guard, bint full=True, tick=None):
    cdef dict rem = {}
    cdef Py_ssize_t steps = 0
    cdef Py_ssize_t i, nb = len(basis)
    cdef tuple entry
    cdef object m, c, lm, lc, tail, g, a, b, shift, k, v, tm, tc
    cdef bint found
    p = dict(p)
    while p:
        m = max(p)
        c = p[m]
        found = False
        for i in range(nb):
            entry = <tuple>basis[i]
            lm = entry[0]
            if not ((m - lm) & guard):
                lc = entry[1]
                tail = entry[2]
                found = True
                break
        if not found:
            if not full:
                break
            del p[m]
            rem[m] = c
            continue
        del p[m]
        g = gcd(c, lc)
        a = lc // g
        b = c // g
        if a != 1:
            for k in p:
                p[k] *= a
            for k in rem:
                rem[k] *= a
        shift = m - lm
        for tm, tc in tail:
            k = tm + shift
            v = p.get(k, 0) - b * tc
            if v:
                p[k] = v
            else:
                p.pop(k, None)
        steps += 1
        if a != 1 and abs(c).bit_length() > _SHRINK_BITS:
            _shrink(p, rem)
        if tick is not None and steps % _TICK_EVERY == 0:
            tick()
    if rem:
        rem.update(p)
        p = rem
    return make_primitive(p)


def spoly(tuple f, tuple g, object lcm):
    cdef object lf = f[0], cf = f[1], tf = f[2]
    cdef object lg = g[0], cg = g[1], tg = g[2]
    cdef object d = gcd(cf, cg)
    cdef object a = cg // d
    cdef object b = cf // d
    cdef object sf = lcm - lf
    cdef object sg = lcm - lg
    cdef dict out = {}
    cdef object m, c, k, v
    for m, c in tf:
        out[m + sf] = a * c
    for m, c in tg:
        k = m + sg
        v = out.get(k, 0) - b * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out
