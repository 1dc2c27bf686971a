"""Sparse multivariate polynomials, monomial orderings, text I/O and division.

A polynomial is an immutable map from exponent tuples to nonzero field values
(plain ``int`` in the encoding of :mod:`abelcodes.field`).  Variables are
named ``x1 .. xs`` with fixed priority ``x1 > x2 > ... > xs``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .errors import (
    CoefficientOutOfField,
    FieldMismatch,
    LengthMismatch,
    PolynomialSyntaxError,
    VariableIndexOutOfRange,
    ZeroDivisor,
    ZeroPolynomial,
)
from .field import Field

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial ordering; ``key(m) < key(m')`` iff ``m < m'``."""

    name: str
    key: Callable[[Exponent], tuple]

    def __repr__(self):
        return self.name


def _grevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


LEX = MonomialOrder("lex", tuple)
GRLEX = MonomialOrder("grlex", lambda m: (sum(m), m))
GREVLEX = MonomialOrder("grevlex", _grevlex_key)
ORDERINGS = {o.name: o for o in (LEX, GRLEX, GREVLEX)}
DEFAULT_ORDER = GREVLEX


def get_ordering(name) -> MonomialOrder:
    if isinstance(name, MonomialOrder):
        return name
    try:
        return ORDERINGS[name]
    except KeyError:
        raise ValueError(f"unknown monomial ordering {name!r}; expected one of {sorted(ORDERINGS)}") from None


def compare(m: Exponent, m2: Exponent, order: MonomialOrder = DEFAULT_ORDER) -> int:
    """-1, 0 or 1 as ``m`` is smaller than, equal to or larger than ``m2``."""
    if len(m) != len(m2):
        raise LengthMismatch(f"{m} and {m2} differ in length")
    a, b = order.key(tuple(m)), order.key(tuple(m2))
    return (a > b) - (a < b)


def dominates(m: Exponent, m2: Exponent) -> bool:
    """Componentwise ``m <= m2``, i.e. X^m divides X^m2."""
    if len(m) != len(m2):
        raise LengthMismatch(f"{m} and {m2} differ in length")
    return all(a <= b for a, b in zip(m, m2))


def _divides(m, m2):
    return all(a <= b for a, b in zip(m, m2))


class Polynomial:
    __slots__ = ("field", "nvars", "terms", "_lead")

    def __init__(self, field: Field, nvars: int, terms: Mapping[Exponent, int] | None = None):
        self.field = field
        self.nvars = nvars
        clean = {}
        if terms:
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != nvars:
                    raise LengthMismatch(f"exponent {m} has length {len(m)}, expected {nvars}")
                if c:
                    clean[m] = c
        self.terms = clean
        self._lead = {}

    @classmethod
    def _raw(cls, field, nvars, terms):
        # trusted constructor: terms already normalized
        f = cls.__new__(cls)
        f.field, f.nvars, f.terms, f._lead = field, nvars, terms, {}
        return f

    @classmethod
    def zero(cls, field, nvars):
        return cls._raw(field, nvars, {})

    @classmethod
    def constant(cls, field, nvars, c=1):
        return cls._raw(field, nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def monomial(cls, field, nvars, exponent, c=1):
        return cls(field, nvars, {tuple(exponent): c})

    @classmethod
    def variable(cls, field, nvars, i):
        """The polynomial ``x{i+1}`` (0-based ``i``)."""
        e = [0] * nvars
        e[i] = 1
        return cls._raw(field, nvars, {tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def support(self) -> list[Exponent]:
        return sorted(self.terms)

    def coefficient(self, m) -> int:
        return self.terms.get(tuple(m), 0)

    def _check(self, other):
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if other.nvars != self.nvars:
            raise LengthMismatch(f"{self.nvars} vs {other.nvars} variables")

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and other.field == self.field
            and other.nvars == self.nvars
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.field, self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        F = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = F.add(out.get(m, 0), c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(F, self.nvars, out)

    def __neg__(self):
        F = self.field
        return Polynomial._raw(F, self.nvars, {m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        F = self.field
        out: dict = {}
        for m, c in self.terms.items():
            for u, d in other.terms.items():
                e = tuple(a + b for a, b in zip(m, u))
                out[e] = F.add(out.get(e, 0), F.mul(c, d))
        return Polynomial._raw(F, self.nvars, {m: c for m, c in out.items() if c})

    def scale(self, c: int) -> Polynomial:
        F = self.field
        if c == 0:
            return Polynomial.zero(F, self.nvars)
        return Polynomial._raw(F, self.nvars, {m: F.mul(v, c) for m, v in self.terms.items()})

    def shift(self, exponent, c: int = 1) -> Polynomial:
        """Product with the term ``c * X^exponent``."""
        F = self.field
        if c == 0:
            return Polynomial.zero(F, self.nvars)
        return Polynomial._raw(
            F,
            self.nvars,
            {tuple(a + b for a, b in zip(m, exponent)): F.mul(v, c) for m, v in self.terms.items()},
        )

    def leading(self, order: MonomialOrder = DEFAULT_ORDER) -> tuple[Exponent, int]:
        """(leading exponent, leading coefficient) under ``order``."""
        hit = self._lead.get(order.name)
        if hit is None:
            if not self.terms:
                raise ZeroPolynomial("the zero polynomial has no leading term")
            m = max(self.terms, key=order.key)
            hit = self._lead[order.name] = (m, self.terms[m])
        return hit

    def monic(self, order: MonomialOrder = DEFAULT_ORDER) -> Polynomial:
        _, c = self.leading(order)
        return self if c == 1 else self.scale(self.field.inv(c))

    def sorted_terms(self, order: MonomialOrder = DEFAULT_ORDER) -> list[tuple[Exponent, int]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def map_exponents(self, fn) -> Polynomial:
        """Apply ``fn`` to every exponent, combining like terms."""
        F = self.field
        out: dict = {}
        for m, c in self.terms.items():
            e = fn(m)
            out[e] = F.add(out.get(e, 0), c)
        return Polynomial._raw(F, self.nvars, {m: c for m, c in out.items() if c})

    def format(self, order: MonomialOrder = DEFAULT_ORDER) -> str:
        return format_polynomial(self, order)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r} over {self.field!r}, s={self.nvars})"


def leading(f: Polynomial, order: MonomialOrder = DEFAULT_ORDER) -> tuple[Exponent, int]:
    return f.leading(order)


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def format_polynomial(f: Polynomial, order: MonomialOrder = DEFAULT_ORDER) -> str:
    if not f.terms:
        return "0"
    parts = []
    for m, c in f.sorted_terms(order):
        factors = []
        for i, e in enumerate(m):
            if e == 1:
                factors.append(f"x{i + 1}")
            elif e > 1:
                factors.append(f"x{i + 1}^{e}")
        if c != 1 or not factors:
            factors.insert(0, f.field.format(c))
        parts.append("*".join(factors))
    return " + ".join(parts)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>x)|(?P<op>[-+*^]))")


def parse(text: str, field: Field, nvars: int, *, strict: bool = False) -> Polynomial:
    """Read a polynomial in the ``x1^2*x2 + 3*x1 + 1`` grammar.

    Integer coefficients are reduced modulo the characteristic; with
    ``strict=True`` a coefficient outside ``range(p)`` is an error instead.
    """
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        mt = _TOKEN.match(text, pos)
        if not mt:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolynomialSyntaxError(f"unexpected character {text[start]!r}", text, start)
        kind = mt.lastgroup
        tokens.append((kind, mt.group(kind), mt.start(kind)))
        pos = mt.end()
    tokens.append(("end", "", len(text)))

    p = field.characteristic
    F = field
    i = 0

    def peek():
        return tokens[i]

    def take(kind, value=None):
        nonlocal i
        tk = tokens[i]
        if tk[0] != kind or (value is not None and tk[1] != value):
            want = value or kind
            got = tk[1] or "end of input"
            raise PolynomialSyntaxError(f"expected {want}, found {got!r}", text, tk[2])
        i += 1
        return tk

    def nat():
        _, v, at = take("num")
        return int(v), at

    def factor(exp):
        take("var")
        idx, at = nat()
        if not 1 <= idx <= nvars:
            raise VariableIndexOutOfRange(f"variable x{idx} outside x1..x{nvars}", text, at)
        e = 1
        if peek()[:2] == ("op", "^"):
            take("op", "^")
            e, _ = nat()
        exp[idx - 1] += e

    def term():
        exp = [0] * nvars
        coeff = 1
        kind = peek()[0]
        if kind == "num":
            c, at = nat()
            if strict and c >= p:
                raise CoefficientOutOfField(f"coefficient {c} not in GF({p})", text, at)
            coeff = c % p
        elif kind == "var":
            factor(exp)
        else:
            tk = peek()
            raise PolynomialSyntaxError(f"expected a term, found {tk[1] or 'end of input'!r}", text, tk[2])
        while peek()[:2] == ("op", "*"):
            take("op", "*")
            factor(exp)
        return tuple(exp), coeff

    acc: dict = {}
    sign = 1
    if peek()[:2] == ("op", "-"):
        take("op", "-")
        sign = -1
    while True:
        m, c = term()
        if sign < 0:
            c = F.neg(c)
        acc[m] = F.add(acc.get(m, 0), c)
        tk = peek()
        if tk[0] == "end":
            break
        if tk[0] == "op" and tk[1] in "+-":
            take("op")
            sign = 1 if tk[1] == "+" else -1
            continue
        raise PolynomialSyntaxError(f"unexpected {tk[1]!r}", text, tk[2])
    return Polynomial(F, nvars, acc)


def multi_divide(
    f: Polynomial, divisors: Iterable[Polynomial], order: MonomialOrder = DEFAULT_ORDER
) -> tuple[list[Polynomial], Polynomial]:
    """Divide ``f`` by an ordered list of polynomials.

    Each step cancels the current leading term with the first divisor whose
    leading monomial divides it; otherwise the term moves to the remainder.
    Returns ``(quotients, remainder)`` with ``f == sum(a*g) + remainder``.
    """
    divisors = list(divisors)
    for g in divisors:
        f._check(g)
        if not g:
            raise ZeroDivisor("division by the zero polynomial")
    F = f.field
    leads = [g.leading(order) for g in divisors]
    inv_leads = [F.inv(c) for _, c in leads]
    quotients: list[dict] = [{} for _ in divisors]
    rem: dict = {}
    work = dict(f.terms)
    key = order.key
    while work:
        m = max(work, key=key)
        c = work[m]
        for k, (lm, _) in enumerate(leads):
            if _divides(lm, m):
                u = tuple(a - b for a, b in zip(m, lm))
                t = F.mul(c, inv_leads[k])
                quotients[k][u] = F.add(quotients[k].get(u, 0), t)
                for gm, gc in divisors[k].terms.items():
                    e = tuple(a + b for a, b in zip(gm, u))
                    v = F.sub(work.get(e, 0), F.mul(t, gc))
                    if v:
                        work[e] = v
                    else:
                        work.pop(e, None)
                break
        else:
            rem[m] = c
            del work[m]
    qs = [Polynomial(F, f.nvars, q) for q in quotients]
    return qs, Polynomial._raw(F, f.nvars, rem)
