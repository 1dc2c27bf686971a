"""Buchberger's algorithm over prime fields and footprints of abelian codes.

A code C in F[X]/K, K = <X_i^r_i - 1>, corresponds to the ideal J of
F[X] generated by representatives of C together with the binomials of K.
The footprint of C is the set of exponents not divisible by any leading
monomial of a Groebner basis of J; it lies inside the box of canonical
exponents and its size is ``n - dim C``.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass

from .algebra import AlgebraContext, CodeSpec
from .poly import DEFAULT_ORDER, MonomialOrder, Polynomial, get_ordering, multi_divide
from .transform import as_generators

log = logging.getLogger(__name__)

Exponent = tuple[int, ...]


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    elements: tuple[Polynomial, ...]
    minimal: bool = False
    reduced: bool = False

    def leading_exponents(self) -> list[Exponent]:
        return [g.leading(self.order)[0] for g in self.elements]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def format(self) -> list[str]:
        return [g.format(self.order) for g in self.elements]


def lifted_ideal(spec: CodeSpec) -> list[Polynomial]:
    """Generators of J: the code's generators followed by the binomials X_i^r_i - 1."""
    ctx = spec.ctx
    if spec.zero:
        return ctx.binomials()
    spec = as_generators(spec)
    if spec.zero:
        return ctx.binomials()
    return list(spec.generators) + ctx.binomials()


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder = DEFAULT_ORDER) -> Polynomial:
    """(lcm/LT(f))*f - (lcm/LT(g))*g for the monic normalizations of f and g."""
    order = get_ordering(order)
    (mf, cf), (mg, cg) = f.leading(order), g.leading(order)
    F = f.field
    m = _lcm(mf, mg)
    a = f.shift(tuple(x - y for x, y in zip(m, mf)), F.inv(cf))
    b = g.shift(tuple(x - y for x, y in zip(m, mg)), F.inv(cg))
    return a - b


def _remainder(f: Polynomial, basis, order) -> Polynomial:
    return multi_divide(f, basis, order)[1] if basis else f


def is_groebner(elements, order: MonomialOrder = DEFAULT_ORDER) -> bool:
    """Every S-polynomial of every pair reduces to zero."""
    order = get_ordering(order)
    G = list(elements)
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if _remainder(s_polynomial(G[i], G[j], order), G, order):
                return False
    return True


def buchberger(generators, order: MonomialOrder = DEFAULT_ORDER, *, verify: bool = True) -> GroebnerBasis:
    """Groebner basis of the ideal generated by ``generators``.

    Pairs are processed smallest-lcm first, pairs with coprime leading
    monomials are skipped, and new elements are made monic as they are added.
    With ``verify`` every S-pair of the result is re-reduced afterwards.
    """
    order = get_ordering(order)
    G: list[Polynomial] = []
    for g in generators:
        if g and g.monic(order) not in G:
            G.append(g.monic(order))
    if not G:
        raise ValueError("Groebner basis of the zero ideal requested")

    key = order.key
    heap: list = []

    def push_pairs(j):
        mj = G[j].leading(order)[0]
        for i in range(j):
            m = _lcm(G[i].leading(order)[0], mj)
            heapq.heappush(heap, (key(m), i, j))

    for j in range(1, len(G)):
        push_pairs(j)

    while heap:
        _, i, j = heapq.heappop(heap)
        mi, mj = G[i].leading(order)[0], G[j].leading(order)[0]
        if all(a == 0 or b == 0 for a, b in zip(mi, mj)):
            continue
        h = _remainder(s_polynomial(G[i], G[j], order), G, order)
        if h:
            G.append(h.monic(order))
            push_pairs(len(G) - 1)

    if verify and not is_groebner(G, order):
        raise AssertionError("Buchberger output fails the S-pair criterion")
    log.debug("buchberger: %d elements under %s", len(G), order.name)
    return GroebnerBasis(order, tuple(G))


def minimalize(gb: GroebnerBasis) -> GroebnerBasis:
    """Drop elements whose leading monomial is divisible by another's; make monic."""
    order = gb.order
    out: list[Polynomial] = []
    elems = [g.monic(order) for g in gb.elements]
    for k, g in enumerate(elems):
        m = g.leading(order)[0]
        redundant = False
        for j, h in enumerate(elems):
            if j == k:
                continue
            mh = h.leading(order)[0]
            # equal leading monomials: keep the first occurrence only
            if _divides(mh, m) and (mh != m or j < k):
                redundant = True
                break
        if not redundant:
            out.append(g)
    return GroebnerBasis(order, tuple(out), minimal=True)


def reduce_basis(gb: GroebnerBasis) -> GroebnerBasis:
    """The unique reduced basis, sorted by increasing leading monomial."""
    order = gb.order
    G = list(minimalize(gb).elements)
    for k in range(len(G)):
        others = G[:k] + G[k + 1 :]
        G[k] = _remainder(G[k], others, order).monic(order)
    G.sort(key=lambda g: order.key(g.leading(order)[0]))
    return GroebnerBasis(order, tuple(G), minimal=True, reduced=True)


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return _remainder(f, list(gb.elements), gb.order)


def groebner_basis(spec: CodeSpec, order: MonomialOrder = DEFAULT_ORDER) -> GroebnerBasis:
    """Reduced Groebner basis of the lifted ideal J of a code."""
    return reduce_basis(buchberger(lifted_ideal(spec), get_ordering(order)))


def staircase_complement(ctx: AlgebraContext, leading_exponents) -> list[Exponent]:
    """Box points not divisible by any of the given leading exponents."""
    leads = list(leading_exponents)
    return [m for m in ctx.indices() if not any(_divides(lm, m) for lm in leads)]


def footprint(spec: CodeSpec, order: MonomialOrder = DEFAULT_ORDER) -> list[Exponent]:
    gb = groebner_basis(spec, order)
    return staircase_complement(spec.ctx, gb.leading_exponents())


def dimension_from_footprint(spec: CodeSpec, order: MonomialOrder = DEFAULT_ORDER) -> int:
    return spec.ctx.n - len(footprint(spec, order))
