"""Hilbert dimension and independent variable sets."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import TrivialIdealError
from .groebner import Ideal, elimination_ideal, groebner_basis


@dataclass(frozen=True)
class DimensionCertificate:
    dimension: int
    witness: tuple[str, ...]


def _minimal_supports(masks: Iterable[int]) -> list[int]:
    masks = sorted(set(masks), key=lambda m: bin(m).count("1"))
    out: list[int] = []
    for m in masks:
        if not any(s & m == s for s in out):
            out.append(m)
    return out


def _lead_supports(I: Ideal) -> tuple[list[int], int]:
    gb = groebner_basis(I)
    if gb.is_unit:
        raise TrivialIdealError("the ideal contains 1")
    masks = []
    for lm in gb.leading_monomials:
        masks.append(sum(1 << i for i, e in enumerate(lm) if e))
    return _minimal_supports(masks), I.ring.arity


def _lt_independent_sets(supports: list[int], n: int, size: int):
    """Subsets of ``size`` variables containing no leading-monomial support.

    Yielded as index tuples in lexicographic order of the declared variables.
    """
    for combo in combinations(range(n), size):
        mask = 0
        for i in combo:
            mask |= 1 << i
        if all(s & ~mask for s in supports):
            yield combo


def hilbert_dimension(I: Ideal) -> DimensionCertificate:
    """Krull dimension of Q[X]/I from the leading terms of a grevlex basis.

    The witness is the lexicographically first largest variable set on which
    no leading monomial is supported.
    """
    supports, n = _lead_supports(I)
    for size in range(n, -1, -1):
        for combo in _lt_independent_sets(supports, n, size):
            return DimensionCertificate(size, tuple(I.ring.names[i] for i in combo))
    raise AssertionError("the empty set is always independent")


def is_independent_set(I: Ideal, Y: Iterable[str]) -> bool:
    """True iff I ∩ Q[Y] = <0>, decided by elimination."""
    Y = tuple(Y)
    if len(set(Y)) != len(Y):
        raise ValueError("duplicate variables in the set")
    return not elimination_ideal(I, Y).generators


def maximal_independent_set(I: Ideal) -> tuple[str, ...]:
    """Lexicographically first independent set of maximum size.

    Candidates of the right size are tried in declared order.  One whose
    variables carry no leading monomial is independent outright; the others
    are settled by elimination, after a quick rejection when some basis
    element lives entirely on the candidate.
    """
    supports, n = _lead_supports(I)
    d = hilbert_dimension(I).dimension
    names = I.ring.names
    gb = groebner_basis(I)
    elem_masks = []
    for g in gb.elements:
        elem_masks.append(sum(1 << names.index(v) for v in g.support()))
    lt_ok = set(_lt_independent_sets(supports, n, d))
    for combo in combinations(range(n), d):
        if combo in lt_ok:
            return tuple(names[i] for i in combo)
        mask = sum(1 << i for i in combo)
        if any(m & ~mask == 0 for m in elem_masks):
            continue
        cand = tuple(names[i] for i in combo)
        if is_independent_set(I, cand):
            return cand
    raise AssertionError("a leading-term independent set always exists")
