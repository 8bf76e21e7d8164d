"""Exact multivariate polynomials over the rationals.

Monomials are exponent tuples aligned with the ring's declared variables.
A monomial order is turned into an integer weight vector so that comparing
two monomials is comparing two integers: ``key(e) = sum(w[i] * e[i])``.
Because the key is linear, ``key(a * b) == key(a) + key(b)``; the Groebner
engine relies on this to pack a monomial and its sort key into one int.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from math import gcd as igcd
from typing import Iterable, Mapping, Sequence

from .errors import ParseError, RingMismatchError

# Bits per exponent field in order keys and packed monomials.  Exponents must
# stay below 2**(FIELD_BITS - 1); the top bit of each field is a borrow guard.
FIELD_BITS = 16
MAX_EXPONENT = (1 << (FIELD_BITS - 1)) - 1

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

Monomial = tuple  # tuple[int, ...], one exponent per ring variable


# ---------------------------------------------------------------------------
# rings and orders
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Ring:
    """Polynomial ring Q[names...] with a fixed variable order."""

    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        for name in names:
            if not isinstance(name, str) or not _IDENT.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")

    @cached_property
    def _index(self) -> dict[str, int]:
        return {n: i for i, n in enumerate(self.names)}

    @property
    def arity(self) -> int:
        return len(self.names)

    def __len__(self):
        return len(self.names)

    def __contains__(self, name) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"variable {name!r} not in ring {self.names}") from None

    def var(self, name: str) -> "Polynomial":
        e = [0] * len(self.names)
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): 1})

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(n) for n in self.names)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * len(self.names): c})

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def extend(self, *names: str) -> "Ring":
        """Ring with ``names`` placed in front of the existing variables."""
        return Ring(tuple(names) + self.names)

    def fresh_name(self, stem: str = "t") -> str:
        name, k = stem, 0
        while name in self._index:
            k += 1
            name = f"{stem}{k}_"
        return name

    def __repr__(self):
        return f"Ring({', '.join(self.names)})"


_KINDS = ("lex", "grevlex")


@dataclass(frozen=True)
class MonomialOrder:
    """Lex, graded reverse lex, or a block order built from those two.

    ``blocks`` is a tuple of ``(variable names, kind)`` pairs compared in
    sequence; variables of the ring not named in any block join the last
    block.  ``MonomialOrder.block(front)`` is the usual two-block elimination
    order for eliminating ``front``.
    """

    kind: str = "grevlex"
    blocks: tuple = ()

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind == "block":
            fixed = []
            seen = set()
            for names, kind in self.blocks:
                if kind not in _KINDS:
                    raise ValueError(f"unknown block kind {kind!r}")
                names = tuple(names)
                if seen.intersection(names):
                    raise ValueError("blocks must be disjoint")
                seen.update(names)
                fixed.append((names, kind))
            if not fixed:
                raise ValueError("block order needs at least one block")
            object.__setattr__(self, "blocks", tuple(fixed))
        elif self.blocks:
            raise ValueError("only block orders carry blocks")

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls("lex")

    @classmethod
    def grevlex(cls) -> "MonomialOrder":
        return cls("grevlex")

    @classmethod
    def block(cls, front: Iterable[str], front_kind: str = "grevlex",
              back_kind: str = "grevlex") -> "MonomialOrder":
        # The back block is left empty here and filled per ring.
        return cls("block", ((tuple(front), front_kind), ((), back_kind)))

    @classmethod
    def nested(cls, *blocks) -> "MonomialOrder":
        return cls("block", tuple(blocks))

    def layout(self, ring: Ring) -> list[tuple[list[int], str]]:
        """Variable indices of each block, in ring order, highest block first."""
        if self.kind != "block":
            return [(list(range(ring.arity)), self.kind)]
        out, used = [], set()
        for names, kind in self.blocks:
            idx = sorted(ring.index(n) for n in names)
            used.update(idx)
            out.append((idx, kind))
        rest = [i for i in range(ring.arity) if i not in used]
        if rest:
            idx, kind = out[-1]
            out[-1] = (sorted(idx + rest), kind)
        return [(idx, kind) for idx, kind in out if idx]

    def weights(self, ring: Ring) -> tuple[int, ...]:
        return _weights(self, ring)

    def key(self, ring: Ring):
        w = self.weights(ring)

        def key(e):
            return sum(a * b for a, b in zip(w, e) if b)

        return key

    def __str__(self):
        if self.kind != "block":
            return self.kind
        inner = "; ".join(f"{kind}({', '.join(names)})" if names else f"{kind}(*)"
                          for names, kind in self.blocks)
        return f"block[{inner}]"


_weight_cache: dict = {}


def _weights(order: MonomialOrder, ring: Ring) -> tuple[int, ...]:
    cache_key = (order, ring.names)
    hit = _weight_cache.get(cache_key)
    if hit is not None:
        return hit
    n = ring.arity
    w = [0] * n
    offset = 0
    for idx, kind in reversed(order.layout(ring)):
        k = len(idx)
        if kind == "lex":
            for j, i in enumerate(idx):
                w[i] += (1 << ((k - 1 - j) * FIELD_BITS)) << offset
        else:
            top = 1 << (k * FIELD_BITS)
            for j, i in enumerate(idx):
                w[i] += (top - (1 << (j * FIELD_BITS))) << offset
        offset += (k + 1) * FIELD_BITS + 3
    out = tuple(w)
    if len(_weight_cache) > 512:
        _weight_cache.clear()
    _weight_cache[cache_key] = out
    return out


DEFAULT_ORDER = MonomialOrder.grevlex()


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficient must be int or Fraction, not {type(c).__name__}")


class Polynomial:
    """Immutable polynomial; terms kept strictly descending under ``order``."""

    __slots__ = ("ring", "order", "_terms", "_dict", "_hash")

    def __init__(self, ring: Ring, terms: Mapping | Iterable = (),
                 order: MonomialOrder | None = None):
        self.ring = ring
        self.order = order or DEFAULT_ORDER
        n = ring.arity
        d: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            mono = tuple(mono)
            if len(mono) != n:
                raise ValueError(f"monomial {mono} does not fit ring of arity {n}")
            c = _as_fraction(c)
            if c:
                d[mono] = d.get(mono, 0) + c
        d = {m: c for m, c in d.items() if c}
        for m in d:
            if any(e < 0 for e in m):
                raise ValueError("negative exponent")
            if any(e > MAX_EXPONENT for e in m):
                raise OverflowError(f"exponent above {MAX_EXPONENT}")
        self._dict = d
        self._terms = None
        self._hash = None

    @classmethod
    def _raw(cls, ring, d, order=None):
        # trusted constructor: d already normalized (Fraction coefficients, no zeros)
        p = object.__new__(cls)
        p.ring = ring
        p.order = order or DEFAULT_ORDER
        p._dict = d
        p._terms = None
        p._hash = None
        return p

    # -- views --------------------------------------------------------------
    @property
    def terms(self) -> tuple[tuple[Monomial, Fraction], ...]:
        if self._terms is None:
            key = self.order.key(self.ring)
            self._terms = tuple(sorted(self._dict.items(),
                                       key=lambda t: key(t[0]), reverse=True))
        return self._terms

    def as_dict(self) -> dict[Monomial, Fraction]:
        return dict(self._dict)

    def with_order(self, order: MonomialOrder) -> "Polynomial":
        if order == self.order:
            return self
        return Polynomial._raw(self.ring, self._dict, order)

    def __len__(self):
        return len(self._dict)

    def __bool__(self):
        return bool(self._dict)

    @property
    def is_zero(self) -> bool:
        return not self._dict

    @property
    def is_constant(self) -> bool:
        return all(not any(m) for m in self._dict)

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError("not a constant")
        return next(iter(self._dict.values()), Fraction(0))

    @property
    def leading_monomial(self) -> Monomial:
        if not self._dict:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0][0]

    @property
    def leading_coefficient(self) -> Fraction:
        if not self._dict:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0][1]

    def total_degree(self) -> int:
        return max((sum(m) for m in self._dict), default=-1)

    def degree(self, var: str) -> int:
        i = self.ring.index(var)
        return max((m[i] for m in self._dict), default=-1)

    def support(self) -> frozenset[str]:
        """Names of the variables that actually occur."""
        used = set()
        for m in self._dict:
            for i, e in enumerate(m):
                if e:
                    used.add(i)
        return frozenset(self.ring.names[i] for i in used)

    def coefficients_in(self, var: str) -> dict[int, "Polynomial"]:
        """View as a univariate polynomial in ``var``: degree -> coefficient."""
        i = self.ring.index(var)
        parts: dict[int, dict] = {}
        for m, c in self._dict.items():
            k = m[i]
            parts.setdefault(k, {})[m[:i] + (0,) + m[i + 1:]] = c
        return {k: Polynomial._raw(self.ring, d, self.order) for k, d in parts.items()}

    def derivative(self, var: str) -> "Polynomial":
        i = self.ring.index(var)
        d = {}
        for m, c in self._dict.items():
            if m[i]:
                d[m[:i] + (m[i] - 1,) + m[i + 1:]] = c * m[i]
        return Polynomial._raw(self.ring, d, self.order)

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = dict(self._dict)
        for m, c in other._dict.items():
            s = d.get(m, 0) + c
            if s:
                d[m] = s
            else:
                d.pop(m, None)
        return Polynomial._raw(self.ring, d, self.order)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self._dict.items()},
                               self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c0 = _as_fraction(other)
            if not c0:
                return self.ring.zero().with_order(self.order)
            return Polynomial._raw(self.ring,
                                   {m: c * c0 for m, c in self._dict.items()},
                                   self.order)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d: dict = {}
        for m1, c1 in self._dict.items():
            for m2, c2 in other._dict.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                d[m] = d.get(m, 0) + c1 * c2
        return Polynomial(self.ring, d, self.order)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one().with_order(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_term(self, mono: Monomial, coeff) -> "Polynomial":
        coeff = _as_fraction(coeff)
        if not coeff:
            return self.ring.zero().with_order(self.order)
        return Polynomial._raw(
            self.ring,
            {tuple(a + b for a, b in zip(m, mono)): c * coeff
             for m, c in self._dict.items()},
            self.order)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._dict == other._dict
        if isinstance(other, (int, Fraction)):
            return self._dict == self.ring.constant(other)._dict
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._dict.items())))
        return self._hash

    # -- normalizations -----------------------------------------------------
    def monic(self) -> "Polynomial":
        if not self._dict:
            return self
        lc = self.leading_coefficient
        return self * (1 / lc)

    def integer_content(self) -> Fraction:
        """Positive rational c with self / c integral and primitive."""
        if not self._dict:
            return Fraction(0)
        num = reduce(igcd, (c.numerator for c in self._dict.values()))
        den = reduce(lambda a, b: a * b // igcd(a, b),
                     (c.denominator for c in self._dict.values()))
        return Fraction(num, den)

    def primitive(self) -> "Polynomial":
        """Integer coefficients, content 1, positive leading coefficient."""
        if not self._dict:
            return self
        c = self.integer_content()
        if self.leading_coefficient < 0:
            c = -c
        return self * (1 / c)

    # -- substitution and ring changes ---------------------------------------
    def subs(self, values: Mapping[str, "int | Fraction | Polynomial"]) -> "Polynomial":
        """Substitute variables by constants or polynomials of the same ring."""
        result = self.ring.zero().with_order(self.order)
        powers: dict = {}
        targets = {self.ring.index(k): v for k, v in values.items()}
        for m, c in self._dict.items():
            rest = list(m)
            term = self.ring.constant(c)
            for i, v in targets.items():
                e = m[i]
                rest[i] = 0
                if e:
                    key = (i, e)
                    if key not in powers:
                        base = v if isinstance(v, Polynomial) else self.ring.constant(v)
                        powers[key] = base ** e
                    term = term * powers[key]
            result = result + term.mul_term(tuple(rest), 1)
        return result

    def to_ring(self, ring: Ring, order: MonomialOrder | None = None) -> "Polynomial":
        """Re-express in ``ring`` by variable name; used variables must exist there."""
        if ring == self.ring:
            return self if order is None else self.with_order(order)
        pos = []
        for i, name in enumerate(self.ring.names):
            pos.append(ring._index.get(name))
        d = {}
        for m, c in self._dict.items():
            e = [0] * ring.arity
            for i, k in enumerate(m):
                if k:
                    j = pos[i]
                    if j is None:
                        raise RingMismatchError(
                            f"variable {self.ring.names[i]!r} missing from {ring!r}")
                    e[j] = k
            d[tuple(e)] = c
        return Polynomial._raw(ring, d, order or DEFAULT_ORDER)

    # -- printing -----------------------------------------------------------
    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def format_monomial(mono: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial) -> str:
    if p.is_zero:
        return "0"
    out = []
    for k, (m, c) in enumerate(p.terms):
        mono = format_monomial(m, p.ring.names)
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<id>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*^/()]))")


def _tokenize(text: str):
    pos, toks = 0, []
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            # report the first non-blank offending character
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[bad]!r}", position=bad)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, op):
        t = self.take()
        if t[0] != "op" or t[1] != op:
            raise ParseError(f"expected {op!r}, found {t[1] or 'end of input'!r}",
                             position=t[2])

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", position=0)
        p = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"unexpected {t[1]!r}", position=t[2])
        return p

    def expr(self):
        p = self.term()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.take()
                q = self.term()
                p = p + q if t[1] == "+" else p - q
            else:
                return p

    def term(self):
        p = self.unary()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] == "*":
                self.take()
                p = p * self.unary()
            elif t[0] in ("num", "id") or (t[0] == "op" and t[1] == "("):
                raise ParseError("implicit multiplication is not allowed; use '*'",
                                 position=t[2])
            else:
                return p

    def unary(self):
        t = self.peek()
        if t[0] == "op" and t[1] == "-":
            self.take()
            return -self.unary()
        if t[0] == "op" and t[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            e = self.take()
            if e[0] != "num":
                raise ParseError("exponent must be a non-negative integer literal",
                                 position=e[2])
            k = int(e[1])
            if k > MAX_EXPONENT:
                raise ParseError("exponent too large", position=e[2])
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] in "^/":
                raise ParseError("exponent must be a non-negative integer literal",
                                 position=nxt[2])
            return base ** k
        return base

    def atom(self):
        t = self.take()
        kind, val, pos = t
        if kind == "num":
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "/":
                self.take()
                den = self.take()
                if den[0] != "num":
                    raise ParseError("rational literal needs an integer denominator",
                                     position=den[2])
                if int(den[1]) == 0:
                    raise ParseError("zero denominator", position=den[2])
                return self.ring.constant(Fraction(int(val), int(den[1])))
            return self.ring.constant(int(val))
        if kind == "id":
            if val not in self.ring:
                raise ParseError(f"undeclared variable {val!r}", position=pos)
            return self.ring.var(val)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        if kind == "end":
            raise ParseError("unexpected end of input", position=pos)
        raise ParseError(f"unexpected {val!r}", position=pos)


def parse_polynomial(text: str, ring: Ring | Sequence[str]) -> Polynomial:
    """Parse ``text`` into an expanded polynomial of ``ring``."""
    if not isinstance(ring, Ring):
        ring = Ring(tuple(ring))
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    return _Parser(text, ring).parse()


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    if a.ring != b.ring:
        raise RingMismatchError(f"ring mismatch: {a.ring!r} vs {b.ring!r}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def poly_pow(a: Polynomial, k: int) -> Polynomial:
    return a ** k


# ---------------------------------------------------------------------------
# division
# ---------------------------------------------------------------------------

def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def normal_form(f: Polynomial, G: Sequence[Polynomial],
                order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of multivariate division of ``f`` by ``G``.

    Each step reduces the largest remaining term by the first element of
    ``G`` whose leading monomial divides it; irreducible terms move to the
    remainder.
    """
    order = order or f.order
    for g in G:
        if g.ring != f.ring:
            raise RingMismatchError(f"ring mismatch: {f.ring!r} vs {g.ring!r}")
        if g.is_zero:
            raise ValueError("divisor list contains the zero polynomial")
    key = order.key(f.ring)
    leads = []
    for g in G:
        g = g.with_order(order)
        lm, lc = g.terms[0]
        leads.append((lm, lc, g.terms[1:]))
    p = dict(f._dict)
    rem = {}
    while p:
        m = max(p, key=key)
        c = p.pop(m)
        for lm, lc, tail in leads:
            if _divides(lm, m):
                q = c / lc
                shift = tuple(x - y for x, y in zip(m, lm))
                for tm, tc in tail:
                    mm = tuple(a + b for a, b in zip(tm, shift))
                    v = p.get(mm, 0) - q * tc
                    if v:
                        p[mm] = v
                    else:
                        p.pop(mm, None)
                break
        else:
            rem[m] = c
    return Polynomial._raw(f.ring, rem, order)


def divide_exact(a: Polynomial, b: Polynomial) -> Polynomial:
    """Quotient ``a / b``; raises ValueError when ``b`` does not divide ``a``."""
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    lex = MonomialOrder.lex()
    key = lex.key(a.ring)
    b = b.with_order(lex)
    lm, lc = b.terms[0]
    tail = b.terms[1:]
    p = dict(a._dict)
    q = {}
    while p:
        m = max(p, key=key)
        if not _divides(lm, m):
            raise ValueError("inexact division")
        c = p.pop(m) / lc
        shift = tuple(x - y for x, y in zip(m, lm))
        q[shift] = c
        for tm, tc in tail:
            mm = tuple(x + y for x, y in zip(tm, shift))
            v = p.get(mm, 0) - c * tc
            if v:
                p[mm] = v
            else:
                p.pop(mm, None)
    return Polynomial._raw(a.ring, q, a.order)


# ---------------------------------------------------------------------------
# gcd and square-free parts
# ---------------------------------------------------------------------------

def _lex_normalize(p: Polynomial) -> Polynomial:
    if p.is_zero:
        return p
    lex = p.with_order(MonomialOrder.lex())
    return (p * (1 / lex.terms[0][1])).with_order(p.order)


def _content_in(p: Polynomial, var: str) -> Polynomial:
    coeffs = list(p.coefficients_in(var).values())
    g = coeffs[0]
    for c in coeffs[1:]:
        g = poly_gcd(g, c)
        if g.is_constant:
            break
    return _lex_normalize(g)


def _pseudo_remainder(a: Polynomial, b: Polynomial, var: str) -> Polynomial:
    db = b.degree(var)
    cb = b.coefficients_in(var)
    lcb = cb[db]
    i = a.ring.index(var)
    r = a
    while not r.is_zero:
        dr = r.degree(var)
        if dr < db:
            break
        lcr = r.coefficients_in(var)[dr]
        shift = [0] * a.ring.arity
        shift[i] = dr - db
        r = r * lcb - (lcr * b).mul_term(tuple(shift), 1)
    return r


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Greatest common divisor over Q, lex-monic (zero only for gcd(0, 0))."""
    if a.ring != b.ring:
        raise RingMismatchError(f"ring mismatch: {a.ring!r} vs {b.ring!r}")
    if a.is_zero:
        return _lex_normalize(b)
    if b.is_zero:
        return _lex_normalize(a)
    if a.is_constant or b.is_constant:
        return a.ring.one().with_order(a.order)
    used = a.support() | b.support()
    var = next(n for n in a.ring.names if n in used)
    da, db = a.degree(var), b.degree(var)
    if da <= 0:
        return poly_gcd(a, _content_in(b, var))
    if db <= 0:
        return poly_gcd(_content_in(a, var), b)
    ca, cb = _content_in(a, var), _content_in(b, var)
    c = poly_gcd(ca, cb)
    pa, pb = divide_exact(a, ca), divide_exact(b, cb)
    if pa.degree(var) < pb.degree(var):
        pa, pb = pb, pa
    while True:
        r = _pseudo_remainder(pa, pb, var)
        if r.is_zero:
            g = pb
            break
        if r.degree(var) <= 0:
            g = a.ring.one()
            break
        pa, pb = pb, divide_exact(r, _content_in(r, var))
    g = divide_exact(g, _content_in(g, var)) if g.degree(var) > 0 else g
    return _lex_normalize(c * g).with_order(a.order)


def primitive_part(p: Polynomial, var: str) -> Polynomial:
    """``p`` divided by its content as a polynomial in ``var``."""
    if p.is_zero:
        raise ValueError("zero polynomial has no primitive part")
    return divide_exact(p, _content_in(p, var))


def squarefree_part(p: Polynomial, main: str) -> Polynomial:
    """Square-free part of ``p`` in ``main``, other variables as parameters.

    Computes pp(p) / gcd(pp(p), d pp(p) / d main), normalized lex-monic.
    """
    if p.is_zero:
        raise ValueError("squarefree_part of the zero polynomial")
    if p.degree(main) <= 0:
        return p.ring.one().with_order(p.order)
    pp = primitive_part(p, main)
    g = poly_gcd(pp, pp.derivative(main))
    return _lex_normalize(divide_exact(pp, g))
