"""Sparse exact multivariate polynomial arithmetic.

Monomials are exponent tuples over a fixed variable list.  Polynomials keep
their terms strictly descending in the ring's monomial order; the zero
polynomial is the empty term sequence.  Coefficients are exact: arbitrary
precision rationals or a word-sized prime field.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class StructureError(ValueError):
    """Shape mismatch: wrong exponent length, foreign ring, unknown position."""


class DomainError(ValueError):
    """Operation undefined for the given value (zero polynomial, zero vector)."""


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" at line {line}" + (f", column {column}" if column is not None else "")
        elif column is not None:
            where = f" at column {column}"
        super().__init__(message + where)


class Cmp(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


# ---------------------------------------------------------------------------
# exponent vectors (plain int tuples)

def exp_degree(e: tuple[int, ...]) -> int:
    return sum(e)


def exp_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) != len(b):
        raise StructureError("exponent length mismatch")
    return tuple(x + y for x, y in zip(a, b))


def exp_divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """True when the monomial a divides b componentwise."""
    if len(a) != len(b):
        raise StructureError("exponent length mismatch")
    return all(x <= y for x, y in zip(a, b))


def exp_div(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...] | None:
    """a / b as a monomial, or None when b does not divide a."""
    if len(a) != len(b):
        raise StructureError("exponent length mismatch")
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def lcm_term(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if len(a) != len(b):
        raise StructureError("exponent length mismatch")
    return tuple(max(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order: degrevlex or lex, with an optional variable precedence.

    ``precedence`` permutes the variables before the standard comparison;
    entry 0 names the most significant variable.  None means the ring's own
    variable order.
    """

    kind: str = "degrevlex"
    precedence: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex"):
            raise StructureError(f"unknown monomial order kind {self.kind!r}")

    def key(self, e: tuple[int, ...]):
        if self.precedence is not None:
            e = tuple(e[i] for i in self.precedence)
        if self.kind == "degrevlex":
            return (sum(e), tuple(-x for x in reversed(e)))
        return e


def compare(a: tuple[int, ...], b: tuple[int, ...], order: MonomialOrder) -> Cmp:
    """Total order on exponent vectors of equal length."""
    if len(a) != len(b):
        raise StructureError("exponent length mismatch")
    ka, kb = order.key(a), order.key(b)
    if ka < kb:
        return Cmp.LT
    if ka > kb:
        return Cmp.GT
    return Cmp.EQ


# ---------------------------------------------------------------------------
# coefficient fields

class RationalField:
    """Arbitrary-precision rationals."""

    is_prime = False

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def of(self, value) -> Fraction:
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DomainError("division by zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return a / b

    def is_zero(self, a) -> bool:
        return a == 0

    def render(self, a) -> str:
        return str(a)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """GF(p) with canonical representatives in [0, p)."""

    is_prime = True

    def __init__(self, p: int):
        if not _is_prime(p):
            raise DomainError(f"{p} is not prime")
        self.p = p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def of(self, value) -> int:
        if isinstance(value, Fraction):
            return self.mul(value.numerator % self.p, self.inv(value.denominator % self.p))
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise DomainError("division by zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def render(self, a) -> str:
        return str(a % self.p)


QQ = RationalField()


# ---------------------------------------------------------------------------
# ring and polynomials

class PolyRing:
    """Context object holding variable names, coefficient field, and order."""

    def __init__(self, names: Sequence[str], field=QQ, order: MonomialOrder | None = None):
        names = tuple(names)
        if not names:
            raise StructureError("ring needs at least one variable")
        if len(set(names)) != len(names):
            raise StructureError("duplicate variable names")
        self.names = names
        self.nvars = len(names)
        self.field = field
        self.order = order if order is not None else MonomialOrder()
        self.zero_exp = (0,) * self.nvars
        self._keycache: dict[tuple[int, ...], tuple] = {}
        self._token_re = self._build_token_re()

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.names == self.names
            and other.field == self.field
            and other.order == self.order
        )

    def __hash__(self):
        return hash((self.names, self.field, self.order))

    def __repr__(self):
        return f"PolyRing({','.join(self.names)}; {self.field}; {self.order.kind})"

    def key(self, e: tuple[int, ...]):
        k = self._keycache.get(e)
        if k is None:
            k = self.order.key(e)
            self._keycache[e] = k
        return k

    # construction ---------------------------------------------------------

    def build(self, terms: Mapping[tuple[int, ...], object] | Iterable) -> "Polynomial":
        """Normalize a term mapping/iterable into a Polynomial."""
        acc: dict[tuple[int, ...], object] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        f = self.field
        for e, c in items:
            e = tuple(e)
            if len(e) != self.nvars:
                raise StructureError("exponent length mismatch")
            prev = acc.get(e)
            acc[e] = f.add(prev, c) if prev is not None else c
        ordered = tuple(
            (e, c)
            for e, c in sorted(acc.items(), key=lambda t: self.key(t[0]), reverse=True)
            if not f.is_zero(c)
        )
        return Polynomial(self, ordered)

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    @property
    def one(self) -> "Polynomial":
        return Polynomial(self, ((self.zero_exp, self.field.one),))

    def var(self, i: int) -> "Polynomial":
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, ((tuple(e), self.field.one),))

    def monomial(self, e: tuple[int, ...], c=None) -> "Polynomial":
        c = self.field.one if c is None else c
        return self.build({tuple(e): c})

    def render_exp(self, e: tuple[int, ...]) -> str:
        if all(x == 0 for x in e):
            return "1"
        parts = []
        for name, k in zip(self.names, e):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    # parsing ---------------------------------------------------------------

    def _build_token_re(self):
        names = sorted(self.names, key=len, reverse=True)
        alt = "|".join(re.escape(n) for n in names)
        return re.compile(
            rf"(?P<ws>\s+)|(?P<num>\d+)|(?P<name>{alt})|(?P<op>[\^\*/+-])"
        )

    def parse(self, text: str) -> "Polynomial":
        """Parse ``3*x^2*y - 1/2*z*t^3`` style text; ``*`` is optional."""
        tokens: list[tuple[str, str, int]] = []
        pos = 0
        for mo in self._token_re.finditer(text):
            if mo.start() != pos:
                raise ParseError(f"unexpected character {text[pos]!r}", column=pos + 1)
            pos = mo.end()
            kind = mo.lastgroup
            if kind != "ws":
                tokens.append((kind, mo.group(), mo.start()))
        if pos != len(text):
            raise ParseError(f"unexpected character {text[pos]!r}", column=pos + 1)
        if not tokens:
            raise ParseError("empty polynomial", column=1)

        f = self.field
        terms: list[tuple[tuple[int, ...], object]] = []
        i = 0
        n = len(tokens)

        def err(msg, tok=None):
            col = (tok[2] + 1) if tok is not None else len(text) + 1
            raise ParseError(msg, column=col)

        while i < n:
            sign = 1
            # leading signs of the term
            while i < n and tokens[i][0] == "op" and tokens[i][1] in "+-":
                if tokens[i][1] == "-":
                    sign = -sign
                i += 1
            if i >= n:
                err("dangling sign")
            coeff = f.of(sign)
            exps = [0] * self.nvars
            saw_factor = False
            while i < n:
                kind, val, _ = tokens[i]
                if kind == "num":
                    i += 1
                    num = int(val)
                    if i < n and tokens[i][0] == "op" and tokens[i][1] == "/":
                        i += 1
                        if i >= n or tokens[i][0] != "num":
                            err("expected denominator", tokens[i - 1])
                        den = int(tokens[i][1])
                        if den == 0:
                            err("zero denominator", tokens[i])
                        i += 1
                        coeff = f.mul(coeff, f.of(Fraction(num, den)))
                    else:
                        coeff = f.mul(coeff, f.of(num))
                    saw_factor = True
                elif kind == "name":
                    vi = self.names.index(val)
                    i += 1
                    k = 1
                    if i < n and tokens[i][0] == "op" and tokens[i][1] == "^":
                        i += 1
                        if i >= n or tokens[i][0] != "num":
                            err("expected exponent", tokens[i - 1])
                        k = int(tokens[i][1])
                        i += 1
                    exps[vi] += k
                    saw_factor = True
                elif kind == "op" and val == "*":
                    i += 1
                    if i >= n or (tokens[i][0] == "op" and tokens[i][1] not in "+-"):
                        err("dangling '*'", tokens[i - 1])
                    if tokens[i][0] == "op":
                        err("dangling '*'", tokens[i - 1])
                elif kind == "op" and val in "+-":
                    break
                else:
                    err(f"unexpected {val!r}", tokens[i])
            if not saw_factor:
                err("empty term")
            terms.append((tuple(exps), coeff))
        return self.build(terms)


class Polynomial:
    """Immutable sparse polynomial; terms strictly descending in the order."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: tuple):
        self.ring = ring
        self.terms = terms

    # inspection -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def ht(self) -> tuple[int, ...]:
        """Head term (monomial) under the ring's order."""
        if not self.terms:
            raise DomainError("zero polynomial has no head term")
        return self.terms[0][0]

    @property
    def hc(self):
        if not self.terms:
            raise DomainError("zero polynomial has no head coefficient")
        return self.terms[0][1]

    @property
    def lot(self) -> "Polynomial":
        """The polynomial minus its head term."""
        if not self.terms:
            raise DomainError("zero polynomial has no lower-order terms")
        return Polynomial(self.ring, self.terms[1:])

    @property
    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(exp_degree(e) for e, _ in self.terms)

    # arithmetic -------------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if other.ring != self.ring:
            raise StructureError("polynomials from different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc = dict(self.terms)
        f = self.ring.field
        for e, c in other.terms:
            prev = acc.get(e)
            acc[e] = f.add(prev, c) if prev is not None else c
        return self.ring.build(acc)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc = dict(self.terms)
        f = self.ring.field
        for e, c in other.terms:
            prev = acc.get(e)
            acc[e] = f.sub(prev, c) if prev is not None else f.neg(c)
        return self.ring.build(acc)

    def __neg__(self) -> "Polynomial":
        f = self.ring.field
        return Polynomial(self.ring, tuple((e, f.neg(c)) for e, c in self.terms))

    def mul_term(self, e: tuple[int, ...], c=None) -> "Polynomial":
        f = self.ring.field
        c = f.one if c is None else c
        if f.is_zero(c):
            return self.ring.zero
        return Polynomial(
            self.ring, tuple((exp_mul(te, e), f.mul(tc, c)) for te, tc in self.terms)
        )

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        f = self.ring.field
        acc: dict[tuple[int, ...], object] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = exp_mul(e1, e2)
                prev = acc.get(e)
                v = f.mul(c1, c2)
                acc[e] = f.add(prev, v) if prev is not None else v
        return self.ring.build(acc)

    def scale(self, c) -> "Polynomial":
        f = self.ring.field
        if f.is_zero(c):
            return self.ring.zero
        return Polynomial(self.ring, tuple((e, f.mul(tc, c)) for e, tc in self.terms))

    def sub_mul(self, c, e: tuple[int, ...], other: "Polynomial") -> "Polynomial":
        """self - c * x^e * other."""
        self._check(other)
        f = self.ring.field
        acc = dict(self.terms)
        for te, tc in other.terms:
            m = exp_mul(te, e)
            v = f.mul(tc, c)
            prev = acc.get(m)
            acc[m] = f.sub(prev, v) if prev is not None else f.neg(v)
        return self.ring.build(acc)

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        c = self.hc
        if c == self.ring.field.one:
            return self
        return self.scale(self.ring.field.inv(c))

    # hashing / rendering ------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        f = self.ring.field
        parts = []
        for i, (e, c) in enumerate(self.terms):
            cs = f.render(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            mono = self.ring.render_exp(e)
            if mono == "1":
                body = cs
            elif cs == "1":
                body = mono
            else:
                body = f"{cs}*{mono}"
            if i == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"<{self}>"


# ---------------------------------------------------------------------------
# S-polynomials and reduction

def spol(p1: Polynomial, p2: Polynomial):
    """Multipliers and S-polynomial: HC(p2)*u1*p1 - HC(p1)*u2*p2.

    Returns (u1, u2, s); the head terms of both products cancel at
    lcm(HT(p1), HT(p2)).
    """
    if p1.is_zero or p2.is_zero:
        raise DomainError("S-polynomial of a zero polynomial")
    p1._check(p2)
    l = lcm_term(p1.ht, p2.ht)
    u1 = exp_div(l, p1.ht)
    u2 = exp_div(l, p2.ht)
    s = p1.mul_term(u1, p2.hc).sub_mul(p1.hc, u2, p2)
    return u1, u2, s


def top_reduce(p: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """Head-reduce p by the first eligible reducer in insertion order.

    Only head terms are rewritten; the result is monic (or zero) and its head
    is divisible by no basis head.
    """
    reducers = [g for g in basis if not g.is_zero]
    while not p.is_zero:
        ht = p.ht
        for g in reducers:
            u = exp_div(ht, g.ht)
            if u is not None:
                c = p.ring.field.div(p.hc, g.hc)
                p = p.sub_mul(c, u, g)
                break
        else:
            break
    return p.monic()


def reduce_full(p: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """Full normal form: every term of the result is irreducible."""
    reducers = [g for g in basis if not g.is_zero]
    done: dict[tuple[int, ...], object] = {}
    while not p.is_zero:
        ht, hc = p.terms[0]
        for g in reducers:
            u = exp_div(ht, g.ht)
            if u is not None:
                p = p.sub_mul(p.ring.field.div(hc, g.hc), u, g)
                break
        else:
            done[ht] = hc
            p = Polynomial(p.ring, p.terms[1:])
    if not done:
        return p.ring.zero
    return p.ring.build(done)


def reduced_basis(polys: Iterable[Polynomial]) -> list[Polynomial]:
    """The unique reduced monic basis of a Groebner basis, head-ascending.

    Sequential autoreduction iterated to a fixpoint: every element is fully
    reduced against all the others, redundant elements fall out as zeros.
    """
    current = [p.monic() for p in polys if not p.is_zero]
    if not current:
        return []
    ring = current[0].ring
    for _ in range(100):
        current.sort(key=lambda p: ring.key(p.ht))
        reduced: list[Polynomial] = []
        changed = False
        for i, f in enumerate(current):
            r = reduce_full(f, reduced + current[i + 1:])
            if r.is_zero:
                changed = True
                continue
            r = r.monic()
            if r != f:
                changed = True
            reduced.append(r)
        if not changed:
            return current
        current = reduced
    raise RuntimeError("autoreduction did not stabilize")
