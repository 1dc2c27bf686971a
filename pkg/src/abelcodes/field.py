"""Exact arithmetic in GF(p) and GF(p^k).

Both field types work on plain ``int`` values.  A prime-field element is its
canonical representative in ``range(p)``; an extension-field element is its
polynomial-basis coefficient vector (low degree first) read as a base-p
integer.  That integer is also the single total order used for every
"smallest element" tie-break, and the prime field embeds in any extension of
the same characteristic as the constants ``0..p-1``.

:class:`FieldElement` wraps a value together with its field for operator use
and for catching cross-field mistakes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import reduce

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NonCoprime,
    NotPrime,
    OrderUnavailable,
)


def is_prime(n: int) -> bool:
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


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``n`` in increasing order (trial division)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def multiplicative_order(a: int, m: int) -> int:
    """Smallest ``d >= 1`` with ``a**d == 1 (mod m)``; requires gcd(a, m) == 1."""
    if m == 1:
        return 1
    if math.gcd(a, m) != 1:
        raise NonCoprime(f"{a} is not invertible modulo {m}")
    d, x = 1, a % m
    while x != 1:
        x = x * a % m
        d += 1
    return d


class Field:
    """Operations common to both field types; subclasses supply the primitives."""

    p: int
    degree: int

    @property
    def order(self) -> int:
        return self.p**self.degree

    @property
    def characteristic(self) -> int:
        return self.p

    zero = 0
    one = 1

    def contains(self, a: int) -> bool:
        return isinstance(a, int) and 0 <= a < self.order

    def elements(self):
        return range(self.order)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponent")
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def element_order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise DivisionByZero("zero has no multiplicative order")
        n = self.order - 1
        d = n
        for ell in prime_factors(n):
            while d % ell == 0 and self.pow(a, d // ell) == 1:
                d //= ell
        return d

    def __call__(self, value) -> FieldElement:
        return FieldElement(self, self.from_json(value))

    def _check(self, value: int) -> int:
        if not self.contains(value):
            raise ValueError(f"{value} is not an element of {self}")
        return value


class PrimeField(Field):
    __slots__ = ("p",)
    degree = 1

    def __init__(self, p: int):
        self.p = p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return -a % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a, e):
        if e < 0:
            raise ValueError("negative exponent")
        return pow(a, e, self.p)

    def to_json(self, a: int):
        return a

    def from_json(self, obj) -> int:
        return int(obj) % self.p

    def format(self, a: int) -> str:
        return str(a)

    def __eq__(self, other):
        return type(other) is PrimeField and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


def make_prime_field(p: int) -> PrimeField:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return PrimeField(p)


def _polymod(num: list[int], mod: list[int], p: int) -> list[int]:
    # mod is monic, low-to-high
    num = num[:]
    k = len(mod) - 1
    for i in range(len(num) - 1, k - 1, -1):
        c = num[i]
        if c:
            shift = i - k
            for j in range(k + 1):
                num[shift + j] = (num[shift + j] - c * mod[j]) % p
    return num[:k]


def _is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = list(low) + [1]
            rem = _polymod(poly, divisor, p)
            if not any(rem):
                return False
    return True


def first_irreducible(p: int, degree: int) -> tuple[int, ...]:
    """First monic irreducible of the given degree, scanning base-p order."""
    for code in range(p**degree):
        low = [(code // p**i) % p for i in range(degree)]
        poly = low + [1]
        if _is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError(f"no irreducible polynomial of degree {degree} over GF({p})")


class ExtensionField(Field):
    """GF(p^k) in polynomial basis over GF(p) modulo a monic irreducible."""

    def __init__(self, base: PrimeField, modulus):
        modulus = tuple(int(c) % base.p for c in modulus)
        if len(modulus) < 2 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        self.base = base
        self.p = base.p
        self.degree = len(modulus) - 1
        self.modulus = modulus
        self._mul_cache: dict[tuple[int, int], int] = {}
        self._primitive: int | None = None

    def digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.degree):
            a, d = divmod(a, p)
            out.append(d)
        return out

    def encode(self, digits) -> int:
        v = 0
        for d in reversed(list(digits)):
            v = v * self.p + d % self.p
        return v

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        p = self.p
        out, scale = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * scale
            scale *= p
        return out

    def neg(self, a):
        if self.p == 2:
            return a
        return self.encode(-d for d in self.digits(a))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if a == 1:
            return b
        if b == 1:
            return a
        key = (a, b) if a <= b else (b, a)
        hit = self._mul_cache.get(key)
        if hit is None:
            x, y = self.digits(a), self.digits(b)
            prod = [0] * (2 * self.degree - 1)
            for i, xi in enumerate(x):
                if xi:
                    for j, yj in enumerate(y):
                        prod[i + j] += xi * yj
            hit = self.encode(_polymod([c % self.p for c in prod], list(self.modulus), self.p))
            self._mul_cache[key] = hit
        return hit

    def primitive_element(self) -> int:
        """Smallest element (base-p order) generating the multiplicative group."""
        if self._primitive is None:
            n = self.order - 1
            for g in range(1, self.order):
                if self.element_order(g) == n:
                    self._primitive = g
                    break
        return self._primitive

    def to_json(self, a: int):
        return self.digits(a)

    def from_json(self, obj) -> int:
        if isinstance(obj, int):
            return self._check(obj)
        if len(obj) != self.degree:
            raise ValueError(f"expected {self.degree} coefficients, got {len(obj)}")
        return self.encode(int(c) for c in obj)

    def format(self, a: int) -> str:
        if a < self.p:
            return str(a)
        return "[" + ",".join(map(str, self.digits(a))) + "]"

    def __eq__(self, other):
        return isinstance(other, ExtensionField) and other.p == self.p and other.modulus == self.modulus

    def __hash__(self):
        return hash(("GF", self.p, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.degree})"


def splitting_field(q, r) -> ExtensionField:
    """Smallest extension GF(q^d) holding primitive r_i-th roots of unity for every r_i.

    ``q`` is either a prime or a pair ``(p, k0)`` meaning ``p**k0``.
    """
    p, k0 = (q, 1) if isinstance(q, int) else q
    base = make_prime_field(p)
    for ri in r:
        if math.gcd(ri, p) != 1:
            raise NonCoprime(f"gcd({ri}, {p}) != 1: no primitive {ri}-th roots of unity")
    ell = reduce(math.lcm, r, 1)
    d = multiplicative_order(p**k0, ell)
    return ExtensionField(base, first_irreducible(p, k0 * d))


def primitive_root(L: ExtensionField, r: int) -> int:
    n = L.order - 1
    if r < 1 or n % r:
        raise OrderUnavailable(f"{L} has no element of order {r}")
    return L.pow(L.primitive_element(), n // r)


@dataclass(frozen=True)
class FieldElement:
    """A field value bound to its field, with arithmetic operators."""

    field: Field
    value: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, int):
            return self.field(other).value
        return NotImplemented

    def __add__(self, other):
        v = self._other(other)
        return FieldElement(self.field, self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        return FieldElement(self.field, self.field.sub(self.value, v))

    def __rsub__(self, other):
        v = self._other(other)
        return FieldElement(self.field, self.field.sub(v, self.value))

    def __mul__(self, other):
        v = self._other(other)
        return FieldElement(self.field, self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __truediv__(self, other):
        v = self._other(other)
        return FieldElement(self.field, self.field.div(self.value, v))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def to_json(self):
        return self.field.to_json(self.value)

    def __repr__(self):
        return f"{self.field.format(self.value)} in {self.field!r}"
