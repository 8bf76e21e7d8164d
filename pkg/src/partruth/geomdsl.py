"""A small construction language for plane geometry, compiled to polynomials.

One statement per line, ``#`` starts a comment::

    point A free
    point B free
    segment f A B
    circle c1 center A radius f
    point C on c1
    parallel h C f
    circle c center C radius f
    intersect D h c
    segment k A D
    segment l B C
    conjecture perpendicular(k, l)

Every point gets two coordinates ``v1, v2, ...`` in creation order.  A
circle whose radius is a segment RQ gets a hidden point X = center + (Q - R)
on it, and a parallel (perpendicular) line through P gets a hidden point
X = P + (Q - R) (rotated a quarter turn) so that it is again a line through
two points.  These hidden points take coordinates like any other.

Beyond ``point <name> free`` there is ``point <name> at <x> <y>`` for a point
with fixed rational coordinates, which takes no variables.  Radii can also
be numbers: ``radius 3/2`` or ``radius sqrt(3)`` (the squared radius must be
rational).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .classifier import Statement
from .errors import ConstructionError, ParseError
from .polyring import Polynomial, Ring


# ---------------------------------------------------------------------------
# syntax tree
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FreePoint:
    name: str

@dataclass(frozen=True)
class FixedPoint:
    name: str
    x: Fraction
    y: Fraction

@dataclass(frozen=True)
class Midpoint:
    name: str
    p: str
    q: str

@dataclass(frozen=True)
class Line:
    name: str
    p: str
    q: str

@dataclass(frozen=True)
class Segment:
    name: str
    p: str
    q: str

@dataclass(frozen=True)
class ParallelLine:
    name: str
    through: str
    line: str

@dataclass(frozen=True)
class PerpendicularLine:
    name: str
    through: str
    line: str

@dataclass(frozen=True)
class CircleCR:
    name: str
    center: str
    radius: str | None = None            # segment name
    radius_squared: Fraction | None = None

@dataclass(frozen=True)
class PointOnCircle:
    name: str
    circle: str

@dataclass(frozen=True)
class PointOnLine:
    name: str
    line: str

@dataclass(frozen=True)
class IntersectLineLine:
    name: str
    first: str
    second: str

@dataclass(frozen=True)
class IntersectLineCircle:
    name: str
    line: str
    circle: str

@dataclass(frozen=True)
class IntersectCircleCircle:
    name: str
    first: str
    second: str


Step = Union[FreePoint, FixedPoint, Midpoint, Line, Segment, ParallelLine,
             PerpendicularLine, CircleCR, PointOnCircle, PointOnLine,
             IntersectLineLine, IntersectLineCircle, IntersectCircleCircle]


@dataclass(frozen=True)
class Predicate:
    kind: str                 # parallel, perpendicular, equal_distance, collinear
    args: tuple[str, ...]


PREDICATE_ARITY = {"parallel": 2, "perpendicular": 2, "equal_distance": 4, "collinear": 3}

# kind of object each step defines
_POINT, _LINE, _CIRCLE = "point", "line", "circle"
_KIND = {
    FreePoint: _POINT, FixedPoint: _POINT, Midpoint: _POINT, PointOnCircle: _POINT,
    PointOnLine: _POINT, IntersectLineLine: _POINT, IntersectLineCircle: _POINT,
    IntersectCircleCircle: _POINT, Line: _LINE, Segment: _LINE, ParallelLine: _LINE,
    PerpendicularLine: _LINE, CircleCR: _CIRCLE,
}


@dataclass(frozen=True)
class Construction:
    steps: tuple[Step, ...]
    conjecture: Predicate

    def kinds(self) -> dict[str, str]:
        return {s.name: _KIND[type(s)] for s in self.steps}


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

_NAME = r"[A-Za-z][A-Za-z0-9_']*"
_NUM = r"[+-]?\d+(?:/0*[1-9]\d*)?"
_CONJ = re.compile(rf"conjecture\s+({_NAME})\s*\(\s*(.*?)\s*\)\s*\Z")


def _number(tok: str, lineno: int) -> Fraction:
    if not re.fullmatch(_NUM, tok):
        raise ParseError(f"expected a rational number, got {tok!r}", line=lineno)
    return Fraction(tok)


def _check_name(tok: str, lineno: int) -> str:
    if not re.fullmatch(_NAME, tok):
        raise ParseError(f"invalid name {tok!r}", line=lineno)
    return tok


def _radius(tokens: list[str], lineno: int):
    text = "".join(tokens)
    m = re.fullmatch(rf"sqrt\(({_NUM})\)", text)
    if m:
        r2 = Fraction(m.group(1))
    elif re.fullmatch(_NUM, text):
        r2 = Fraction(text) ** 2
    elif len(tokens) == 1 and re.fullmatch(_NAME, tokens[0]):
        return tokens[0], None
    else:
        raise ParseError(f"bad radius {text!r}", line=lineno)
    if r2 <= 0:
        raise ParseError("the squared radius must be positive", line=lineno)
    return None, r2


def _parse_step(tokens: list[str], lineno: int) -> Step:
    head, rest = tokens[0], tokens[1:]

    def want(n):
        if len(rest) != n:
            raise ParseError(f"'{head}' takes {n} arguments, got {len(rest)}", line=lineno)
        return [_check_name(t, lineno) for t in rest]

    if head == "point":
        if len(rest) == 2 and rest[1] == "free":
            return FreePoint(_check_name(rest[0], lineno))
        if len(rest) == 3 and rest[1] == "on":
            # circle or line is decided once referents are known
            return PointOnLine(_check_name(rest[0], lineno), _check_name(rest[2], lineno))
        if len(rest) == 4 and rest[1] == "at":
            return FixedPoint(_check_name(rest[0], lineno),
                              _number(rest[2], lineno), _number(rest[3], lineno))
        raise ParseError("expected 'point <name> free|on <object>|at <x> <y>'", line=lineno)
    if head == "midpoint":
        return Midpoint(*want(3))
    if head == "line":
        return Line(*want(3))
    if head == "segment":
        return Segment(*want(3))
    if head == "parallel":
        return ParallelLine(*want(3))
    if head == "perpendicular":
        return PerpendicularLine(*want(3))
    if head == "intersect":
        return IntersectLineLine(*want(3))
    if head == "circle":
        if len(rest) < 5 or rest[1] != "center" or rest[3] != "radius":
            raise ParseError("expected 'circle <name> center <P> radius <r>'", line=lineno)
        seg, r2 = _radius(rest[4:], lineno)
        return CircleCR(_check_name(rest[0], lineno), _check_name(rest[2], lineno), seg, r2)
    raise ParseError(f"unknown statement {head!r}", line=lineno)


def _normalize_predicate(name: str) -> str:
    return re.sub(r"(?<!^)(?=[A-Z])", "_", name).lower()


def _resolve(step: Step, kinds: dict[str, str], lineno: int) -> Step:
    """Check referents and pick the step variant that fits their kinds."""

    def need(ref, *allowed):
        if ref not in kinds:
            raise ParseError(f"undefined object {ref!r}", line=lineno)
        if kinds[ref] not in allowed:
            raise ParseError(f"{ref!r} is a {kinds[ref]}, expected {' or '.join(allowed)}",
                             line=lineno)
        return kinds[ref]

    if isinstance(step, (FreePoint, FixedPoint)):
        return step
    if isinstance(step, (Midpoint, Line, Segment)):
        need(step.p, _POINT)
        need(step.q, _POINT)
        if step.p == step.q:
            raise ParseError(f"{step.name!r} needs two distinct points", line=lineno)
        return step
    if isinstance(step, (ParallelLine, PerpendicularLine)):
        need(step.through, _POINT)
        need(step.line, _LINE)
        return step
    if isinstance(step, CircleCR):
        need(step.center, _POINT)
        if step.radius is not None:
            need(step.radius, _LINE)
        return step
    if isinstance(step, PointOnLine):
        if need(step.line, _LINE, _CIRCLE) == _CIRCLE:
            return PointOnCircle(step.name, step.line)
        return step
    if isinstance(step, IntersectLineLine):
        a = need(step.first, _LINE, _CIRCLE)
        b = need(step.second, _LINE, _CIRCLE)
        if step.first == step.second:
            raise ParseError("cannot intersect an object with itself", line=lineno)
        if a == _LINE and b == _LINE:
            return step
        if a == _CIRCLE and b == _CIRCLE:
            return IntersectCircleCircle(step.name, step.first, step.second)
        line, circle = (step.first, step.second) if a == _LINE else (step.second, step.first)
        return IntersectLineCircle(step.name, line, circle)
    raise AssertionError(step)


def parse_construction(text: str) -> Construction:
    """Parse a construction script; errors carry the offending line number."""
    steps: list[Step] = []
    kinds: dict[str, str] = {}
    conjecture = None
    last = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        last = lineno
        if line.startswith("conjecture"):
            if conjecture is not None:
                raise ParseError("only one conjecture is allowed", line=lineno)
            m = _CONJ.match(line)
            if not m:
                raise ParseError("expected 'conjecture <predicate>(args)'", line=lineno)
            kind = _normalize_predicate(m.group(1))
            if kind not in PREDICATE_ARITY:
                raise ParseError(f"unknown predicate {m.group(1)!r}", line=lineno)
            args = tuple(a.strip() for a in m.group(2).split(",")) if m.group(2) else ()
            if len(args) != PREDICATE_ARITY[kind]:
                raise ParseError(f"{kind} takes {PREDICATE_ARITY[kind]} arguments",
                                 line=lineno)
            want = _LINE if kind in ("parallel", "perpendicular") else _POINT
            for a in args:
                if a not in kinds:
                    raise ParseError(f"undefined object {a!r}", line=lineno)
                if kinds[a] != want:
                    raise ParseError(f"{a!r} is a {kinds[a]}, expected {want}", line=lineno)
            conjecture = Predicate(kind, args)
            continue
        if conjecture is not None:
            raise ParseError("the conjecture must be the last statement", line=lineno)
        step = _resolve(_parse_step(line.split(), lineno), kinds, lineno)
        if step.name in kinds:
            raise ParseError(f"duplicate name {step.name!r}", line=lineno)
        kinds[step.name] = _KIND[type(step)]
        steps.append(step)
    if conjecture is None:
        raise ParseError("missing conjecture", line=last or None)
    return Construction(tuple(steps), conjecture)


# ---------------------------------------------------------------------------
# compiler
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Provenance:
    point: str
    coordinate: str
    free: bool


@dataclass(frozen=True)
class CompiledStatement:
    statement: Statement
    provenance: dict[str, Provenance]

    @property
    def independent(self) -> tuple[str, ...]:
        return tuple(v for v in self.statement.ring.names if self.provenance[v].free)

    def to_json(self) -> dict:
        s = self.statement
        return {
            "ring": list(s.ring.names),
            "hypotheses": [str(h) for h in s.hypotheses],
            "thesis": str(s.thesis),
            "provenance": {v: {"point": p.point, "coordinate": p.coordinate, "free": p.free}
                           for v, p in self.provenance.items()},
        }


class _Builder:
    # Equations are recorded symbolically and only turned into polynomials
    # once every variable exists and the origin pin is known.
    def __init__(self, construction: Construction):
        self.coords: dict[str, tuple[str, str]] = {}        # point -> variable names
        self.lines: dict[str, tuple[str, str]] = {}         # line -> two points on it
        self.circles: dict[str, tuple[str, object]] = {}    # circle -> center, point or r^2
        self.var_names: list[str] = []
        self.provenance: dict[str, Provenance] = {}
        self.used = set(construction.kinds())
        self._aux = 0
        self.first_free: str | None = None

    def new_point(self, name: str, free_x: bool, free_y: bool):
        k = len(self.var_names)
        vx, vy = f"v{k + 1}", f"v{k + 2}"
        self.var_names += [vx, vy]
        self.provenance[vx] = Provenance(name, "x", free_x)
        self.provenance[vy] = Provenance(name, "y", free_y)
        self.coords[name] = (vx, vy)

    def aux_name(self) -> str:
        while True:
            self._aux += 1
            name = f"X{self._aux}"
            if name not in self.used:
                self.used.add(name)
                return name


def _d2(p, q):
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2


def _cross(p, q, r):
    # (q - p) x (r - p)
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def compile_construction(c: Construction, pin_origin: bool = True) -> CompiledStatement:
    """Translate a construction into hypotheses, a thesis and provenance."""
    b = _Builder(c)
    fixed: dict[str, tuple[Fraction, Fraction]] = {}
    pending = []   # (kind, data) equations, evaluated once the ring exists

    for step in c.steps:
        if isinstance(step, FreePoint):
            b.new_point(step.name, True, True)
            if b.first_free is None:
                b.first_free = step.name
        elif isinstance(step, FixedPoint):
            fixed[step.name] = (step.x, step.y)
        elif isinstance(step, Midpoint):
            b.new_point(step.name, False, False)
            pending.append(("midpoint", step.name, step.p, step.q))
        elif isinstance(step, (Line, Segment)):
            b.lines[step.name] = (step.p, step.q)
        elif isinstance(step, (ParallelLine, PerpendicularLine)):
            aux = b.aux_name()
            b.new_point(aux, False, False)
            r, q = b.lines[step.line]
            kind = "parallel" if isinstance(step, ParallelLine) else "perpendicular"
            pending.append((kind, aux, step.through, r, q))
            b.lines[step.name] = (step.through, aux)
        elif isinstance(step, CircleCR):
            if step.radius is None:
                b.circles[step.name] = (step.center, step.radius_squared)
            else:
                aux = b.aux_name()
                b.new_point(aux, False, False)
                r, q = b.lines[step.radius]
                pending.append(("parallel", aux, step.center, r, q))
                b.circles[step.name] = (step.center, aux)
        elif isinstance(step, PointOnCircle):
            b.new_point(step.name, True, False)
            pending.append(("on_circle", step.name, step.circle))
        elif isinstance(step, PointOnLine):
            b.new_point(step.name, True, False)
            pending.append(("on_line", step.name, step.line))
        elif isinstance(step, IntersectLineLine):
            b.new_point(step.name, False, False)
            pending.append(("on_line", step.name, step.first))
            pending.append(("on_line", step.name, step.second))
        elif isinstance(step, IntersectLineCircle):
            b.new_point(step.name, False, False)
            pending.append(("on_line", step.name, step.line))
            pending.append(("on_circle", step.name, step.circle))
        elif isinstance(step, IntersectCircleCircle):
            b.new_point(step.name, False, False)
            pending.append(("on_circle", step.name, step.first))
            pending.append(("on_circle", step.name, step.second))
        else:
            raise ConstructionError(f"unsupported step {step!r}")

    pinned = set()
    if pin_origin and b.first_free is not None:
        pinned = set(b.coords[b.first_free])
    names = tuple(v for v in b.var_names if v not in pinned)
    ring = Ring(names)

    def pt(name):
        if name in fixed:
            x, y = fixed[name]
            return ring.constant(x), ring.constant(y)
        return tuple(ring.zero() if v in pinned else ring.var(v) for v in b.coords[name])

    def circle_eq(p, circle):
        center, other = b.circles[circle]
        if isinstance(other, Fraction):
            return _d2(pt(center), pt(p)) - other
        return _d2(pt(center), pt(other)) - _d2(pt(center), pt(p))

    def line_eq(p, line):
        q1, q2 = b.lines[line]
        return _cross(pt(q1), pt(p), pt(q2))

    hyps: list[Polynomial] = []
    for eq in pending:
        kind = eq[0]
        if kind == "midpoint":
            m, p, q = (pt(n) for n in eq[1:])
            hyps += [2 * m[0] - p[0] - q[0], 2 * m[1] - p[1] - q[1]]
        elif kind in ("parallel", "perpendicular"):
            x, p, r, q = (pt(n) for n in eq[1:])
            dx, dy = q[0] - r[0], q[1] - r[1]
            if kind == "perpendicular":
                dx, dy = -dy, dx
            hyps += [x[0] - p[0] - dx, x[1] - p[1] - dy]
        elif kind == "on_circle":
            hyps.append(circle_eq(eq[1], eq[2]))
        elif kind == "on_line":
            hyps.append(line_eq(eq[1], eq[2]))

    pred = c.conjecture
    if pred.kind in ("parallel", "perpendicular"):
        (p1, q1), (p2, q2) = (tuple(pt(n) for n in b.lines[a]) for a in pred.args)
        u = (q1[0] - p1[0], q1[1] - p1[1])
        w = (q2[0] - p2[0], q2[1] - p2[1])
        if pred.kind == "perpendicular":
            thesis = u[0] * w[0] + u[1] * w[1]
        else:
            thesis = u[0] * w[1] - u[1] * w[0]
    elif pred.kind == "equal_distance":
        p, q, r, s = (pt(n) for n in pred.args)
        thesis = _d2(p, q) - _d2(r, s)
    elif pred.kind == "collinear":
        thesis = _cross(*(pt(n) for n in pred.args))
    else:
        raise ConstructionError(f"unsupported predicate {pred.kind!r}")

    hyps = [h for h in hyps if not h.is_zero]
    provenance = {v: b.provenance[v] for v in names}
    statement = Statement(ring, tuple(hyps), ring.zero() + thesis,
                          provenance={v: (p.point, p.coordinate, p.free)
                                      for v, p in provenance.items()})
    return CompiledStatement(statement, provenance)


def compile_script(text: str, pin_origin: bool = True) -> CompiledStatement:
    return compile_construction(parse_construction(text), pin_origin)
