"""Pure-Python reduction kernel.

Polynomials here are dicts ``{packed monomial: int coefficient}``; a packed
monomial is an int whose high part is the order key and whose low part holds
the exponent fields, so ``max(p)`` is the leading monomial, ``a + b`` is the
product and ``(b - a) & guard == 0`` tests divisibility.  Basis elements are
triples ``(lead, lead_coeff, tail)`` with ``lead_coeff > 0`` and ``tail`` a
list of ``(monomial, coeff)`` pairs.  All arithmetic is fraction-free.

The compiled kernel in ``_kernel.pyx`` mirrors this module line for line.
"""

from math import gcd

BACKEND = "python"

_SHRINK_BITS = 384
_TICK_EVERY = 256


def _content(d):
    g = 0
    for v in d.values():
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


def _shrink(p, rem):
    g = gcd(_content(p), _content(rem)) if rem else _content(p)
    if g > 1:
        for k in p:
            p[k] //= g
        for k in rem:
            rem[k] //= g


def make_primitive(d):
    """Divide by the integer content and make the leading coefficient positive."""
    if not d:
        return d
    g = _content(d)
    if d[max(d)] < 0:
        g = -g
    if g != 1:
        return {k: v // g for k, v in d.items()}
    return d


def reduce_poly(p, basis, guard, full=True, tick=None):
    """Reduce ``p`` modulo ``basis``; result is primitive with positive lead.

    With ``full`` false only the leading term is reduced (top reduction) and
    the first irreducible leading term ends the loop.
    """
    p = dict(p)
    rem = {}
    steps = 0
    while p:
        m = max(p)
        c = p[m]
        for lm, lc, tail in basis:
            if not ((m - lm) & guard):
                break
        else:
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


def spoly(f, g, lcm):
    """S-polynomial of basis elements ``f`` and ``g`` with lead lcm ``lcm``."""
    lf, cf, tf = f
    lg, cg, tg = g
    d = gcd(cf, cg)
    a = cg // d
    b = cf // d
    sf = lcm - lf
    sg = lcm - lg
    out = {}
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
