"""Decide whether a statement {H => f} is generally true, generally false,
or true on parts and false on parts.

The pipeline:

0. 1 in H                          -> CONTRADICTORY_HYPOTHESES
1. choose Y, check H ∩ K[Y] = <0>  -> NOT_INDEPENDENT on failure
2. |Y| must equal dim H            -> DIMENSION_MISMATCH otherwise
3. <H, f*t - 1> ∩ K[Y] != <0>      -> GENERALLY_TRUE
4. <H, f> ∩ K[Y] != <0>            -> GENERALLY_FALSE
5. otherwise                       -> TRUE_ON_PARTS_FALSE_ON_PARTS
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .dimension import hilbert_dimension, maximal_independent_set
from .errors import ResourceLimitExceeded
from .groebner import Ideal, elimination_ideal, is_trivial
from .polyring import Polynomial, Ring


class Verdict(enum.Enum):
    GENERALLY_TRUE = "generally_true"
    GENERALLY_FALSE = "generally_false"
    TRUE_ON_PARTS_FALSE_ON_PARTS = "true_on_parts_false_on_parts"
    CONTRADICTORY_HYPOTHESES = "contradictory_hypotheses"
    NOT_INDEPENDENT = "not_independent"
    DIMENSION_MISMATCH = "dimension_mismatch"


ADVICE = {
    Verdict.GENERALLY_TRUE: "the statement is generally true",
    Verdict.GENERALLY_FALSE: "the statement is generally false",
    Verdict.TRUE_ON_PARTS_FALSE_ON_PARTS:
        "the statement is true on parts, false on parts",
    Verdict.CONTRADICTORY_HYPOTHESES:
        "the hypotheses are contradictory (1 lies in the hypothesis ideal)",
    Verdict.NOT_INDEPENDENT:
        "the chosen variables are not independent modulo the hypotheses",
    Verdict.DIMENSION_MISMATCH:
        "the number of free variables differs from the dimension of the "
        "hypotheses; check for degenerations in the construction",
}


@dataclass(frozen=True)
class Statement:
    ring: Ring
    hypotheses: tuple[Polynomial, ...]
    thesis: Polynomial
    declared_independent: tuple[str, ...] | None = None
    # variable -> (point, coordinate, free?) when compiled from a construction
    provenance: Mapping[str, tuple[str, str, bool]] | None = None

    def __post_init__(self):
        object.__setattr__(self, "hypotheses", tuple(self.hypotheses))
        for p in self.hypotheses + (self.thesis,):
            if p.ring != self.ring:
                from .errors import RingMismatchError
                raise RingMismatchError(f"{p} is not in {self.ring!r}")
        if self.declared_independent is not None:
            Y = tuple(self.declared_independent)
            for n in Y:
                if n not in self.ring:
                    raise ValueError(f"independent variable {n!r} not in ring")
            if len(set(Y)) != len(Y):
                raise ValueError("duplicate independent variables")
            object.__setattr__(self, "declared_independent", Y)

    @classmethod
    def parse(cls, ring: Sequence[str] | Ring, hypotheses: Iterable[str],
              thesis: str, independent: Iterable[str] | None = None,
              provenance=None) -> "Statement":
        if not isinstance(ring, Ring):
            ring = Ring(tuple(ring))
        return cls(ring, tuple(ring.parse(h) for h in hypotheses), ring.parse(thesis),
                   None if independent is None else tuple(independent), provenance)

    @property
    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.hypotheses)

    def free_variables(self) -> tuple[str, ...] | None:
        if not self.provenance:
            return None
        return tuple(n for n in self.ring.names
                     if n in self.provenance and self.provenance[n][2])


@dataclass
class Report:
    verdict: Verdict
    dimension: int
    independent_set_used: tuple[str, ...]
    degeneracy_conditions: tuple[Polynomial, ...] = ()
    timings: dict[str, float] = field(default_factory=dict)
    independent_source: str = "declared"
    oracle_zws: bool | None = None

    @property
    def message(self) -> str:
        return ADVICE[self.verdict]


def _extended(H: Ideal, extra: Polynomial) -> tuple[Ideal, Ring]:
    t = H.ring.fresh_name("t")
    big = H.ring.extend(t)
    gens = [h.to_ring(big) for h in H.generators]
    gens.append(extra.to_ring(big) * big.var(t) - 1)
    return Ideal(big, tuple(gens)), big


def generally_true_test(H: Ideal, f: Polynomial, Y: Iterable[str]
                        ) -> tuple[bool, tuple[Polynomial, ...]]:
    """Is <H, f*t - 1> ∩ K[Y] nonzero?  Returns the flag and its generators."""
    Y = tuple(Y)
    if f.is_zero:
        one = H.ring.one()
        return True, (one,)
    J, big = _extended(H, f)
    E = elimination_ideal(J, Y)
    gens = tuple(g.to_ring(H.ring) for g in E.generators)
    return bool(gens), gens


def generally_false_test(H: Ideal, f: Polynomial, Y: Iterable[str]
                         ) -> tuple[bool, tuple[Polynomial, ...]]:
    """Is <H, f> ∩ K[Y] nonzero?  Returns the flag and its generators."""
    E = elimination_ideal(H + f, tuple(Y))
    return bool(E.generators), E.generators


class _Clock:
    def __init__(self):
        self.timings: dict[str, float] = {}
        self.step = None

    def run(self, step, fn, *args):
        self.step = step
        t0 = time.perf_counter()
        try:
            return fn(*args)
        finally:
            self.timings[step] = self.timings.get(step, 0.0) + time.perf_counter() - t0


def classify(s: Statement) -> Report:
    """Run the decision pipeline on ``s`` and report every diagnostic."""
    clock = _Clock()
    try:
        return _classify(s, clock)
    except ResourceLimitExceeded as exc:
        if exc.step is None:
            exc.step = clock.step
        raise


def _classify(s: Statement, clock: _Clock) -> Report:
    H = s.ideal
    f = s.thesis

    if clock.run("trivial", is_trivial, H):
        return Report(Verdict.CONTRADICTORY_HYPOTHESES, -1, (),
                      timings=clock.timings, independent_source="none")

    if s.declared_independent is not None:
        Y, source = s.declared_independent, "declared"
    elif s.free_variables() is not None:
        Y, source = s.free_variables(), "construction"
    else:
        Y, source = clock.run("independent_set", maximal_independent_set, H), "computed"
    Y = tuple(n for n in s.ring.names if n in set(Y))

    independent = clock.run("independence",
                            lambda: not elimination_ideal(H, Y).generators)
    dim = clock.run("dimension", hilbert_dimension, H).dimension
    if not independent:
        return Report(Verdict.NOT_INDEPENDENT, dim, Y, timings=clock.timings,
                      independent_source=source)
    if dim != len(Y):
        return Report(Verdict.DIMENSION_MISMATCH, dim, Y, timings=clock.timings,
                      independent_source=source)

    ok, conds = clock.run("generally_true", generally_true_test, H, f, Y)
    if ok:
        return Report(Verdict.GENERALLY_TRUE, dim, Y, conds, clock.timings, source)
    ok, conds = clock.run("generally_false", generally_false_test, H, f, Y)
    if ok:
        return Report(Verdict.GENERALLY_FALSE, dim, Y, conds, clock.timings, source)
    return Report(Verdict.TRUE_ON_PARTS_FALSE_ON_PARTS, dim, Y, (), clock.timings, source)
