"""The quotient algebra F[X1..Xs]/<X1^r1 - 1, ..., Xs^rs - 1> over a prime field."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property, reduce

from .errors import ContextMismatch, IndexOutOfRange, NotSemisimple, SpecError
from .field import ExtensionField, PrimeField, make_prime_field, primitive_root, splitting_field
from .poly import Polynomial, parse


class AlgebraContext:
    """Ambient data for abelian codes of shape ``r`` over GF(q).

    Holds the splitting field ``L``, the fixed tuple ``alpha`` of primitive
    ``r_i``-th roots of unity in ``L`` and their power tables.  Two contexts
    compare equal when ``q`` and ``r`` agree, since every derived quantity is
    chosen deterministically from them.
    """

    def __init__(self, q: int, r):
        r = tuple(int(x) for x in r)
        if not r:
            raise SpecError("at least one radix is required")
        if any(x < 1 for x in r):
            raise SpecError(f"radices must be positive, got {r}")
        self.field: PrimeField = make_prime_field(q)
        self.q = q
        self.r = r
        self.s = len(r)
        self.n = math.prod(r)
        if math.gcd(self.n, q) != 1:
            raise NotSemisimple(f"gcd(n={self.n}, q={q}) != 1")
        self.L: ExtensionField = splitting_field(q, r)
        self.alpha = tuple(primitive_root(self.L, ri) for ri in r)
        L = self.L
        self.alpha_powers = tuple(
            tuple(L.pow(a, j) for j in range(ri)) for a, ri in zip(self.alpha, r)
        )
        # column k <-> k-th tuple of itertools.product, last coordinate fastest
        self._strides = tuple(math.prod(r[i + 1 :]) for i in range(self.s))

    def __eq__(self, other):
        return isinstance(other, AlgebraContext) and (other.q, other.r) == (self.q, self.r)

    def __hash__(self):
        return hash(("AlgebraContext", self.q, self.r))

    def __repr__(self):
        return f"AlgebraContext(q={self.q}, r={list(self.r)})"

    @cached_property
    def n_inverse(self) -> int:
        return self.field.inv(self.n % self.q)

    @cached_property
    def lcm(self) -> int:
        return reduce(math.lcm, self.r, 1)

    # index set
    def indices(self):
        """All of Z_r1 x ... x Z_rs, row-major with the last coordinate fastest."""
        return itertools.product(*(range(ri) for ri in self.r))

    def index_of(self, m) -> int:
        return sum(a * st for a, st in zip(m, self._strides))

    def in_box(self, m) -> bool:
        return len(m) == self.s and all(0 <= a < ri for a, ri in zip(m, self.r))

    def check_index(self, m) -> tuple[int, ...]:
        m = tuple(m)
        if not self.in_box(m):
            raise IndexOutOfRange(f"{m} is not in Z_{self.r}")
        return m

    # elements
    def zero(self) -> Polynomial:
        return Polynomial.zero(self.field, self.s)

    def one(self) -> Polynomial:
        return Polynomial.constant(self.field, self.s, 1)

    def monomial(self, m, c: int = 1) -> Polynomial:
        return Polynomial.monomial(self.field, self.s, self.check_index(m), c)

    def parse(self, text: str) -> Polynomial:
        return self.reduce(parse(text, self.field, self.s))

    def binomials(self) -> list[Polynomial]:
        """The relations X_i^r_i - 1."""
        F = self.field
        out = []
        for i, ri in enumerate(self.r):
            e = [0] * self.s
            e[i] = ri
            out.append(Polynomial(F, self.s, {tuple(e): 1, (0,) * self.s: F.neg(1)}))
        return out

    def check_element(self, f: Polynomial, allow_extension: bool = False) -> Polynomial:
        ok = (self.field,) + ((self.L,) if allow_extension else ())
        if not isinstance(f, Polynomial) or f.nvars != self.s or f.field not in ok:
            raise ContextMismatch(f"{f!r} does not belong to {self!r}")
        return f

    def reduce(self, f: Polynomial) -> Polynomial:
        """Canonical representative: exponents taken modulo r_i."""
        self.check_element(f, allow_extension=True)
        r = self.r
        if all(all(a < ri for a, ri in zip(m, r)) for m in f.terms):
            return f
        return f.map_exponents(lambda m: tuple(a % ri for a, ri in zip(m, r)))

    def is_canonical(self, f: Polynomial) -> bool:
        return all(self.in_box(m) for m in f.terms)

    def mul(self, f: Polynomial, g: Polynomial) -> Polynomial:
        self.check_element(f, allow_extension=True)
        self.check_element(g, allow_extension=True)
        return self.reduce(f * g)

    def evaluate(self, f: Polynomial, m) -> int:
        """f(alpha^m) as an element of L."""
        self.check_element(f, allow_extension=True)
        m = self.check_index(m)
        L = self.L
        pw = self.alpha_powers
        total = 0
        for u, c in f.terms.items():
            v = c
            for i, (ui, mi) in enumerate(zip(u, m)):
                v = L.mul(v, pw[i][(ui * mi) % self.r[i]])
            total = L.add(total, v)
        return total

    def to_vector(self, f: Polynomial) -> list[int]:
        """Dense coefficient vector of a canonical element in column order."""
        v = [0] * self.n
        for m, c in self.reduce(f).terms.items():
            v[self.index_of(m)] = c
        return v


def new_context(q: int, r) -> AlgebraContext:
    return AlgebraContext(q, r)


def reduce_element(ctx: AlgebraContext, f: Polynomial) -> Polynomial:
    return ctx.reduce(f)


def quot_mul(ctx: AlgebraContext, f: Polynomial, g: Polynomial) -> Polynomial:
    return ctx.mul(f, g)


def evaluate(ctx: AlgebraContext, f: Polynomial, m) -> int:
    return ctx.evaluate(f, m)


@dataclass(frozen=True)
class DFTVector:
    """Values indexed by the column enumeration of the index set, entries in L."""

    ctx: AlgebraContext
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.ctx.n:
            raise ContextMismatch(f"expected {self.ctx.n} entries, got {len(self.values)}")

    def __getitem__(self, m):
        return self.values[self.ctx.index_of(m)]

    def support(self) -> set[tuple[int, ...]]:
        return {m for m, v in zip(self.ctx.indices(), self.values) if v}

    def __add__(self, other: DFTVector) -> DFTVector:
        if other.ctx != self.ctx:
            raise ContextMismatch("DFT vectors from different contexts")
        L = self.ctx.L
        return DFTVector(self.ctx, tuple(L.add(a, b) for a, b in zip(self.values, other.values)))


@dataclass(frozen=True)
class CodeSpec:
    """An abelian code given by ideal generators, by a defining set, or as the zero code.

    Use the ``from_generators``, ``from_defining_set`` and ``zero_code``
    constructors; exactly one description is present.
    """

    ctx: AlgebraContext
    generators: tuple[Polynomial, ...] | None = None
    defining: object | None = None  # orbits.OrbitSet
    zero: bool = False

    def __post_init__(self):
        given = (self.generators is not None) + (self.defining is not None) + bool(self.zero)
        if given != 1:
            raise SpecError("a code spec needs exactly one of generators, defining set, zero marker")
        if self.generators is not None and not self.generators:
            raise SpecError("generator list is empty")

    @classmethod
    def from_generators(cls, ctx: AlgebraContext, generators) -> CodeSpec:
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ctx.parse(g)
            else:
                g = ctx.reduce(ctx.check_element(g))
            if g:
                gens.append(g)
        if not gens:
            raise SpecError("all generators are zero; use CodeSpec.zero_code for the zero code")
        return cls(ctx, generators=tuple(gens))

    @classmethod
    def from_defining_set(cls, orbit_set) -> CodeSpec:
        return cls(orbit_set.ctx, defining=orbit_set)

    @classmethod
    def zero_code(cls, ctx: AlgebraContext) -> CodeSpec:
        return cls(ctx, zero=True)

    @classmethod
    def whole_ring(cls, ctx: AlgebraContext) -> CodeSpec:
        return cls(ctx, generators=(ctx.one(),))

    @property
    def kind(self) -> str:
        if self.zero:
            return "zero"
        return "generators" if self.generators is not None else "defining_set"
