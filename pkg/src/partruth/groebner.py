"""Buchberger's algorithm and the ideal operations built on it.

Internally every polynomial is a dict of packed monomials (see
``_kernel_py``) with integer, content-free coefficients.  Results handed back
to callers are field-monic ``Polynomial`` objects.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import kernel
from .errors import ResourceLimitExceeded, RingMismatchError
from .limits import current_limits
from .polyring import (FIELD_BITS, MonomialOrder, Polynomial, Ring,
                       DEFAULT_ORDER)


class Encoder:
    """Packs exponent tuples of one ring under one order into ints."""

    def __init__(self, ring: Ring, order: MonomialOrder):
        n = ring.arity
        self.ring = ring
        self.order = order
        self.n = n
        w = order.weights(ring)
        shift = n * FIELD_BITS
        self.units = [(w[i] << shift) + (1 << (i * FIELD_BITS)) for i in range(n)]
        self.guard = sum(1 << (i * FIELD_BITS + FIELD_BITS - 1) for i in range(n))
        self.lowmask = (1 << shift) - 1
        self.fieldmask = (1 << FIELD_BITS) - 1

    def pack(self, e) -> int:
        return sum(u * k for u, k in zip(self.units, e) if k)

    def unpack(self, m: int) -> tuple[int, ...]:
        low = m & self.lowmask
        fm = self.fieldmask
        return tuple((low >> (i * FIELD_BITS)) & fm for i in range(self.n))

    def support(self, m: int) -> int:
        low = m & self.lowmask
        fm = self.fieldmask
        mask = 0
        for i in range(self.n):
            if (low >> (i * FIELD_BITS)) & fm:
                mask |= 1 << i
        return mask

    def lcm(self, a: int, b: int) -> int:
        la, lb = a & self.lowmask, b & self.lowmask
        fm = self.fieldmask
        r = a
        for i in range(self.n):
            s = i * FIELD_BITS
            ea, eb = (la >> s) & fm, (lb >> s) & fm
            if eb > ea:
                r += (eb - ea) * self.units[i]
        return r

    def divides(self, a: int, b: int) -> bool:
        return not ((b - a) & self.guard)

    def encode(self, p: Polynomial) -> dict[int, int]:
        """Integer-primitive packed form of ``p`` (zero maps to {})."""
        if p.ring != self.ring:
            raise RingMismatchError(f"ring mismatch: {p.ring!r} vs {self.ring!r}")
        if p.is_zero:
            return {}
        q = p.primitive()
        return {self.pack(m): int(c) for m, c in q._dict.items()}

    def decode(self, d: dict[int, int], monic: bool = True) -> Polynomial:
        from fractions import Fraction
        if not d:
            return Polynomial._raw(self.ring, {}, self.order)
        lc = d[max(d)] if monic else 1
        return Polynomial._raw(
            self.ring,
            {self.unpack(m): Fraction(c, lc) for m, c in d.items()},
            self.order)


def _element(d: dict[int, int]):
    terms = sorted(d.items(), reverse=True)
    lead, lc = terms[0]
    return (lead, lc, terms[1:])


def _as_dict(el) -> dict[int, int]:
    lead, lc, tail = el
    d = dict(tail)
    d[lead] = lc
    return d


def _tick():
    current_limits().check_time()


def _check_overflow(d, enc):
    for m in d:
        if m & enc.guard:
            raise ResourceLimitExceeded("exponent exceeds the supported range")


def buchberger(polys: Iterable[dict[int, int]], enc: Encoder) -> list[tuple]:
    """Reduced Groebner basis of packed polynomials.

    Uses the Gebauer-Moeller installation of the coprime and chain criteria
    and selects pairs by smallest lcm (normal strategy); ties go to the pair
    created first.  Returns elements sorted ascending by leading monomial.
    """
    limits = current_limits()
    guard = enc.guard
    reduce_poly = kernel.reduce_poly
    tick = _tick if limits.deadline is not None else None

    inputs = [kernel.make_primitive(dict(p)) for p in polys if p]
    inputs.sort(key=max)

    G: list[tuple] = []          # all elements ever added
    supp: list[int] = []
    active: list[int] = []       # indices of the current minimal basis
    pairs: dict[tuple[int, int], int] = {}
    heap: list = []
    seq = 0

    def active_basis():
        return [G[i] for i in active]

    def install(d):
        nonlocal seq, active
        h = len(G)
        el = _element(d)
        G.append(el)
        lead_h = el[0]
        supp_h = enc.support(lead_h)
        supp.append(supp_h)
        # new pairs (i, h), chain criterion against each other
        cand = [(i, enc.lcm(G[i][0], lead_h)) for i in active]
        keep = []
        for pos, (i, l) in enumerate(cand):
            if not (supp[i] & supp_h):
                keep.append((i, l, True))
                continue
            dominated = False
            for j, l2 in cand[pos + 1:]:
                if not ((l - l2) & guard):
                    dominated = True
                    break
            if not dominated:
                for j, l2, _ in keep:
                    if not ((l - l2) & guard):
                        dominated = True
                        break
            if not dominated:
                keep.append((i, l, False))
        # old pairs whose lcm is a proper multiple handled by h
        for (i, j), l in list(pairs.items()):
            if not ((l - lead_h) & guard):
                if enc.lcm(G[i][0], lead_h) != l and enc.lcm(G[j][0], lead_h) != l:
                    del pairs[(i, j)]
        for i, l, coprime in keep:
            if coprime:
                continue
            pairs[(i, h)] = l
            heapq.heappush(heap, (l, seq, i, h))
            seq += 1
        active = [i for i in active if (G[i][0] - lead_h) & guard] + [h]
        limits.check_size(len(active))

    for d in inputs:
        limits.check_time()
        r = reduce_poly(d, active_basis(), guard, True, tick)
        if not r:
            continue
        if max(r) == 0:
            return [(0, 1, [])]
        _check_overflow(r, enc)
        install(r)

    while heap:
        limits.check_time()
        l, _, i, j = heapq.heappop(heap)
        if pairs.pop((i, j), None) is None:
            continue
        s = kernel.spoly(G[i], G[j], l)
        if not s:
            continue
        r = reduce_poly(s, active_basis(), guard, True, tick)
        if not r:
            continue
        if max(r) == 0:
            return [(0, 1, [])]
        _check_overflow(r, enc)
        install(r)

    # interreduce the minimal basis
    basis = active_basis()
    out = []
    for k, el in enumerate(basis):
        others = basis[:k] + basis[k + 1:]
        r = reduce_poly(_as_dict(el), others, guard, True, tick)
        out.append(_element(r))
    out.sort(key=lambda e: e[0])
    return out


# ---------------------------------------------------------------------------
# public types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Ideal:
    """Ideal of ``ring`` generated by ``generators`` (empty means <0>)."""

    ring: Ring
    generators: tuple[Polynomial, ...] = ()

    def __post_init__(self):
        gens = []
        for g in self.generators:
            if not isinstance(g, Polynomial):
                raise TypeError("generators must be Polynomial objects")
            if g.ring != self.ring:
                raise RingMismatchError(f"generator {g} is not in {self.ring!r}")
            if not g.is_zero:
                gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def parse(cls, ring: Ring | Sequence[str], texts: Iterable[str]) -> "Ideal":
        if not isinstance(ring, Ring):
            ring = Ring(tuple(ring))
        return cls(ring, tuple(ring.parse(t) for t in texts))

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __contains__(self, f) -> bool:
        return ideal_membership(f, self)

    def __add__(self, other: "Ideal | Polynomial | Iterable[Polynomial]") -> "Ideal":
        if isinstance(other, Ideal):
            extra = other.generators
        elif isinstance(other, Polynomial):
            extra = (other,)
        else:
            extra = tuple(other)
        return Ideal(self.ring, self.generators + tuple(extra))

    def to_ring(self, ring: Ring) -> "Ideal":
        return Ideal(ring, tuple(g.to_ring(ring) for g in self.generators))

    def __str__(self):
        return "<" + ", ".join(str(g) for g in self.generators) + ">" \
            if self.generators else "<0>"


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis; elements monic, ascending by leading monomial."""

    ring: Ring
    order: MonomialOrder
    elements: tuple[Polynomial, ...]

    @property
    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant

    @property
    def leading_monomials(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g.leading_monomial for g in self.elements)

    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.elements)

    def reduce(self, f: Polynomial) -> Polynomial:
        enc = Encoder(self.ring, self.order)
        packed = _packed_basis(self)
        r = kernel.reduce_poly(enc.encode(f), packed, enc.guard, True, None)
        return enc.decode(r)

    def contains(self, f: Polynomial) -> bool:
        if f.ring != self.ring:
            raise RingMismatchError(f"ring mismatch: {f.ring!r} vs {self.ring!r}")
        if f.is_zero:
            return True
        enc = Encoder(self.ring, self.order)
        r = kernel.reduce_poly(enc.encode(f), _packed_basis(self), enc.guard,
                               False, None)
        return not r

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


@lru_cache(maxsize=256)
def _packed_basis(gb: GroebnerBasis):
    enc = Encoder(gb.ring, gb.order)
    return [_element(enc.encode(g)) for g in gb.elements]


@lru_cache(maxsize=256)
def _groebner_cached(ring: Ring, gens: tuple[Polynomial, ...],
                     order: MonomialOrder) -> GroebnerBasis:
    enc = Encoder(ring, order)
    packed = buchberger((enc.encode(g) for g in gens), enc)
    elems = tuple(enc.decode(_as_dict(el)) for el in packed)
    return GroebnerBasis(ring, order, elems)


def clear_cache() -> None:
    """Forget memoized bases, e.g. before timing a computation."""
    _groebner_cached.cache_clear()
    _packed_basis.cache_clear()


def groebner_basis(I: Ideal, order: MonomialOrder | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``I`` under ``order`` (grevlex by default)."""
    order = order or DEFAULT_ORDER
    gens = tuple(sorted(set(g.with_order(DEFAULT_ORDER) for g in I.generators),
                        key=str))
    return _groebner_cached(I.ring, gens, order)


def ideal_membership(f: Polynomial, I: Ideal,
                     order: MonomialOrder | None = None) -> bool:
    if f.ring != I.ring:
        raise RingMismatchError(f"ring mismatch: {f.ring!r} vs {I.ring!r}")
    return groebner_basis(I, order).contains(f)


def is_trivial(I: Ideal) -> bool:
    """True iff 1 lies in ``I``."""
    return groebner_basis(I).is_unit


def elimination_order(ring: Ring, keep: Iterable[str]) -> MonomialOrder:
    keep = set(keep)
    front = [n for n in ring.names if n not in keep]
    return MonomialOrder.nested((tuple(front), "grevlex"),
                                (tuple(n for n in ring.names if n in keep), "grevlex"))


def _check_vars(ring: Ring, names: Iterable[str]) -> frozenset[str]:
    names = frozenset(names)
    missing = names.difference(ring.names)
    if missing:
        raise ValueError(f"variables {sorted(missing)} not in ring {ring.names}")
    return names


def elimination_ideal(I: Ideal, keep: Iterable[str]) -> Ideal:
    """Generators of ``I`` intersected with Q[keep], as an ideal of ``I.ring``.

    With ``keep`` empty the answer is <1> when 1 is in ``I`` and <0> otherwise.
    """
    keep = _check_vars(I.ring, keep)
    gb = groebner_basis(I, elimination_order(I.ring, keep))
    if gb.is_unit:
        return Ideal(I.ring, gb.elements)
    if not keep:
        return Ideal(I.ring, ())
    return Ideal(I.ring, tuple(g for g in gb.elements if g.support() <= keep))


def _with_fresh(ring: Ring, stem: str = "t") -> tuple[Ring, str]:
    t = ring.fresh_name(stem)
    return ring.extend(t), t


def saturation(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f^inf), via <I, f*t - 1> eliminated down to the original ring."""
    if f.ring != I.ring:
        raise RingMismatchError(f"ring mismatch: {f.ring!r} vs {I.ring!r}")
    if f.is_zero:
        raise ValueError("saturation by the zero polynomial")
    big, t = _with_fresh(I.ring)
    gens = [g.to_ring(big) for g in I.generators]
    gens.append(f.to_ring(big) * big.var(t) - 1)
    J = elimination_ideal(Ideal(big, tuple(gens)), I.ring.names)
    return J.to_ring(I.ring)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J via t*I + (1 - t)*J with t eliminated."""
    if I.ring != J.ring:
        raise RingMismatchError(f"ring mismatch: {I.ring!r} vs {J.ring!r}")
    if not I.generators or not J.generators:
        return Ideal(I.ring, ())
    big, t = _with_fresh(I.ring)
    tv = big.var(t)
    gens = [tv * g.to_ring(big) for g in I.generators]
    gens += [(1 - tv) * g.to_ring(big) for g in J.generators]
    K = elimination_ideal(Ideal(big, tuple(gens)), I.ring.names)
    return K.to_ring(I.ring)


def ideal_quotient(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f) = {g : f*g in I}."""
    from .polyring import divide_exact
    if f.ring != I.ring:
        raise RingMismatchError(f"ring mismatch: {f.ring!r} vs {I.ring!r}")
    if f.is_zero:
        raise ValueError("quotient by the zero polynomial")
    if not I.generators:
        return Ideal(I.ring, ())
    inter = ideal_intersection(I, Ideal(I.ring, (f,)))
    quo = tuple(divide_exact(g, f) for g in inter.generators)
    return Ideal(I.ring, tuple(groebner_basis(Ideal(I.ring, quo)).elements))


def ideals_equal(I: Ideal, J: Ideal) -> bool:
    if I.ring != J.ring:
        return False
    return groebner_basis(I).elements == groebner_basis(J).elements


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """Rational S-polynomial, for checks independent of the packed engine."""
    f, g = f.with_order(order), g.with_order(order)
    mf, mg = f.leading_monomial, g.leading_monomial
    lcm = tuple(max(a, b) for a, b in zip(mf, mg))
    uf = tuple(a - b for a, b in zip(lcm, mf))
    ug = tuple(a - b for a, b in zip(lcm, mg))
    return f.mul_term(uf, 1 / f.leading_coefficient) - \
        g.mul_term(ug, 1 / g.leading_coefficient)
