"""Zero-divisor test over the function field K(Y).

An ideal H of K[Y, Z] is extended to K(Y)[Z] by taking a Groebner basis
under a block order with Z above Y and reading it with coefficients in
K(Y).  Whether f is zero, a zero divisor or regular modulo the radical of
that extension separates the split verdict from the other two without any
elimination in K[Y], which makes it a cross-check for ``classifier``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable

from .errors import NotIndependentError, NotZeroDimensionalError
from .groebner import (GroebnerBasis, Ideal, groebner_basis, ideal_intersection,
                       ideal_quotient, saturation, elimination_ideal)
from .polyring import MonomialOrder, Polynomial, Ring, squarefree_part


class ZeroDivisorStatus(enum.Enum):
    ZERO = "zero"
    ZERODIVISOR = "zerodivisor"
    REGULAR = "regular"


def _split(ring: Ring, Y: Iterable[str]) -> tuple[tuple[str, ...], tuple[str, ...]]:
    Y = set(Y)
    missing = Y.difference(ring.names)
    if missing:
        raise ValueError(f"variables {sorted(missing)} not in ring {ring.names}")
    params = tuple(n for n in ring.names if n in Y)
    main = tuple(n for n in ring.names if n not in Y)
    return params, main


def _joint_content(p: Polynomial, q: Polynomial) -> Fraction:
    a = p.integer_content()
    if q.is_zero:
        return a
    b = q.integer_content()
    return Fraction(gcd(a.numerator, b.numerator),
                    a.denominator * b.denominator // gcd(a.denominator, b.denominator))


def _ff_order(main, params) -> MonomialOrder:
    return MonomialOrder.nested((tuple(main), "grevlex"), (tuple(params), "grevlex"))


@dataclass(frozen=True)
class FunctionFieldIdeal:
    """Extension of an ideal of K[Y, Z] to K(Y)[Z].

    ``basis`` is a Groebner basis in K[Y, Z] under the block order Z >> Y;
    read over K(Y) it is a Groebner basis of the extension, with leading
    monomials the Z-parts of its leading monomials.
    """

    ring: Ring
    parameters: tuple[str, ...]
    main_vars: tuple[str, ...]
    basis: GroebnerBasis
    leading_coefficients: tuple[Polynomial, ...]

    def ideal(self) -> Ideal:
        return self.basis.ideal()

    @property
    def _zmask(self):
        return tuple(n in self.main_vars for n in self.ring.names)

    def _lead_z(self, p: Polynomial) -> tuple[int, ...]:
        lm = p.with_order(self.basis.order).leading_monomial
        return tuple(e if z else 0 for e, z in zip(lm, self._zmask))

    def _z_coefficient(self, p: Polynomial, zmono) -> Polynomial:
        zmask = self._zmask
        d = {}
        for m, c in p._dict.items():
            if all((e if z else 0) == t for e, z, t in zip(m, zmask, zmono)):
                d[tuple(0 if z else e for e, z in zip(m, zmask))] = c
        return Polynomial._raw(self.ring, d, self.basis.order)

    def normal_form(self, f: Polynomial, full: bool = True) -> Polynomial:
        """Remainder of ``f`` modulo the extension, up to a factor in K[Y].

        Coefficients from K[Y] are treated as units: a step multiplies the
        running remainder by the reducer's K[Y] leading coefficient instead
        of dividing by it.
        """
        order = self.basis.order
        leads = [(self._lead_z(g), lc, g.with_order(order))
                 for g, lc in zip(self.basis.elements, self.leading_coefficients)]
        p = f.to_ring(self.ring, order)
        rem = self.ring.zero().with_order(order)
        while not p.is_zero:
            zm = self._lead_z(p)
            c = self._z_coefficient(p, zm)
            for lz, lc, g in leads:
                if all(a <= b for a, b in zip(lz, zm)):
                    shift = tuple(b - a for a, b in zip(lz, zm))
                    p = p * lc - (c * g).mul_term(shift, 1)
                    rem = rem * lc
                    break
            else:
                if not full:
                    return (rem + p).primitive()
                head = c.mul_term(zm, 1)
                rem = rem + head
                p = p - head
            if not p.is_zero:
                k = _joint_content(p, rem)
                p, rem = p * (1 / k), rem * (1 / k)
        return rem.primitive() if not rem.is_zero else rem

    def minimal_basis(self) -> tuple[Polynomial, ...]:
        """Elements still needed once K[Y] coefficients are invertible.

        An element whose Z-leading monomial is a multiple of another's is
        redundant over K(Y); among equal Z-leads the first one is kept.
        """
        leads = [self._lead_z(g) for g in self.basis.elements]
        keep = []
        for i, a in enumerate(leads):
            redundant = any(
                all(x <= y for x, y in zip(b, a)) and (b != a or j < i)
                for j, b in enumerate(leads) if j != i)
            if not redundant:
                keep.append(self.basis.elements[i])
        return tuple(keep)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f, full=False).is_zero

    def __str__(self):
        return (f"{self.basis.ideal()} over K({', '.join(self.parameters)})"
                f"[{', '.join(self.main_vars)}]")


def extend_to_function_field(H: Ideal, Y: Iterable[str]) -> FunctionFieldIdeal:
    """Block-order basis of H read over K(Y); Y must be independent for H."""
    params, main = _split(H.ring, Y)
    order = _ff_order(main, params)
    gb = groebner_basis(H, order)
    pset = frozenset(params)
    for g in gb.elements:
        if g.support() <= pset:
            raise NotIndependentError(
                f"{{{', '.join(params)}}} is not independent: {g} lies in the ideal")
    E = FunctionFieldIdeal(H.ring, params, main, gb, ())
    lcs = tuple(E._z_coefficient(g, E._lead_z(g)) for g in gb.elements)
    return FunctionFieldIdeal(H.ring, params, main, gb, lcs)


def _eliminant(E: FunctionFieldIdeal, z: str) -> Polynomial | None:
    """Generator of the extension intersected with K(Y)[z], or None if zero."""
    rest = tuple(n for n in E.main_vars if n != z)
    order = MonomialOrder.nested((rest, "grevlex"), ((z,), "grevlex"),
                                 (E.parameters, "grevlex"))
    gb = groebner_basis(E.ideal(), order)
    allowed = frozenset(E.parameters) | {z}
    best = None
    for g in gb.elements:
        if g.support() <= allowed and g.degree(z) > 0:
            if best is None or g.degree(z) < best.degree(z):
                best = g
    return best


def _contract(I: Ideal, params, main) -> FunctionFieldIdeal:
    """Replace I by (its extension to K(params)) ∩ K[X], the canonical representative."""
    E = extend_to_function_field(I, params)
    seen = set()
    J = I
    for lc in E.leading_coefficients:
        if lc.is_constant:
            continue
        h = lc.primitive()
        if h in seen:
            continue
        seen.add(h)
        J = saturation(J, h)
    return extend_to_function_field(J, params) if J is not I else E


def _seidenberg(E: FunctionFieldIdeal) -> FunctionFieldIdeal:
    extra = []
    for z in E.main_vars:
        m = _eliminant(E, z)
        if m is None:
            raise NotZeroDimensionalError(
                f"no nonzero eliminant in {z} over K({', '.join(E.parameters)})")
        extra.append(squarefree_part(m, z))
    R = Ideal(E.ring, E.basis.elements + tuple(extra))
    return _contract(R, E.parameters, E.main_vars)


def radical_zero_dimensional(E: FunctionFieldIdeal) -> FunctionFieldIdeal:
    """Radical of a zero-dimensional extension by Seidenberg's construction.

    Each main variable's univariate eliminant over K(Y) is replaced by its
    square-free part; the result is returned contracted to K[Y, Z] so that its
    reduced basis is canonical.
    """
    return _seidenberg(E)


def is_zero_dimensional(E: FunctionFieldIdeal) -> bool:
    return all(_eliminant(E, z) is not None for z in E.main_vars)


def _greedy_independent(H: Ideal, params, main) -> tuple[str, ...]:
    chosen = list(params)
    for z in main:
        if not elimination_ideal(H, chosen + [z]).generators:
            chosen.append(z)
    return tuple(n for n in H.ring.names if n in set(chosen))


def radical(E: FunctionFieldIdeal) -> FunctionFieldIdeal:
    """Radical of the extension, zero-dimensional or not.

    Positive-dimensional extensions are split as
    sqrt(H) = sqrt(H : g^inf) ∩ sqrt(H + <g>), where the first part is zero
    dimensional over a larger parameter field and the second part recurses.
    """
    params, main = E.parameters, E.main_vars
    H = E.ideal()
    W = _greedy_independent(H, params, main)
    if len(W) == len(params):
        return _seidenberg(E)
    wide = extend_to_function_field(H, W)
    R1 = _seidenberg(wide)
    g = H.ring.one()
    seen = set()
    for lc in wide.leading_coefficients:
        if not lc.is_constant and lc.primitive() not in seen:
            seen.add(lc.primitive())
            g = g * lc.primitive()
    pieces = [R1.ideal()]
    if not g.is_constant:
        H2 = H + g
        try:
            E2 = extend_to_function_field(H2, params)
        except NotIndependentError:
            E2 = None
        if E2 is not None:
            pieces.append(radical(E2).ideal())
    J = pieces[0]
    for P in pieces[1:]:
        J = ideal_intersection(J, P)
    return _contract(J, params, main)


def zero_divisor_status(f: Polynomial, R: FunctionFieldIdeal) -> ZeroDivisorStatus:
    """Classify ``f`` in K(Y)[Z]/R for a radical extension R."""
    if R.contains(f):
        return ZeroDivisorStatus.ZERO
    Q = ideal_quotient(R.ideal(), f.to_ring(R.ring))
    for q in Q.generators:
        if not R.contains(q):
            return ZeroDivisorStatus.ZERODIVISOR
    return ZeroDivisorStatus.REGULAR


def zws_status(H: Ideal, f: Polynomial, Y: Iterable[str]) -> ZeroDivisorStatus:
    E = extend_to_function_field(H, Y)
    return zero_divisor_status(f, radical(E))


def zws_test(H: Ideal, f: Polynomial, Y: Iterable[str]) -> bool:
    """True iff f is a nonzero zero divisor modulo the radical of H over K(Y)."""
    return zws_status(H, f, Y) is ZeroDivisorStatus.ZERODIVISOR


def _in_radical_over(H: Ideal, g: Polynomial, params) -> bool:
    # g in sqrt(H K(Y)[Z])  <=>  <H, g*t - 1> meets K[Y]
    if g.is_zero:
        return True
    big_t = H.ring.fresh_name("t")
    big = H.ring.extend(big_t)
    gens = [h.to_ring(big) for h in H.generators]
    gens.append(g.to_ring(big) * big.var(big_t) - 1)
    return bool(elimination_ideal(Ideal(big, tuple(gens)), params).generators)


def zws_status_by_saturation(H: Ideal, f: Polynomial,
                             Y: Iterable[str]) -> ZeroDivisorStatus:
    """Same classification without computing any radical.

    f is a zero divisor modulo sqrt(H') exactly when some generator of the
    saturation (H : f^inf) falls outside sqrt(H'); radical membership is the
    Rabinowitsch test over K(Y).
    """
    params, _ = _split(H.ring, Y)
    if f.is_zero or _in_radical_over(H, f, params):
        return ZeroDivisorStatus.ZERO
    S = saturation(H, f)
    for g in S.generators:
        if not _in_radical_over(H, g, params):
            return ZeroDivisorStatus.ZERODIVISOR
    return ZeroDivisorStatus.REGULAR
