"""Random elements and codes for property checks."""

from __future__ import annotations

import random

from .algebra import AlgebraContext, CodeSpec
from .orbits import OrbitSet, all_orbits
from .poly import Polynomial


def random_exponent(ctx: AlgebraContext, rng: random.Random) -> tuple[int, ...]:
    return tuple(rng.randrange(ri) for ri in ctx.r)


def random_element(ctx: AlgebraContext, rng: random.Random) -> Polynomial:
    """Uniform element of the algebra: every coefficient uniform in GF(q)."""
    return Polynomial(ctx.field, ctx.s, {m: rng.randrange(ctx.q) for m in ctx.indices()})


def random_sparse(ctx: AlgebraContext, rng: random.Random, max_terms: int = 5) -> Polynomial:
    """1..max_terms terms with exponents in the box and nonzero coefficients; may cancel to 0."""
    terms: dict = {}
    F = ctx.field
    for _ in range(rng.randint(1, max_terms)):
        m = random_exponent(ctx, rng)
        terms[m] = F.add(terms.get(m, 0), rng.randrange(1, ctx.q))
    return Polynomial(F, ctx.s, terms)


def random_generator_code(ctx: AlgebraContext, rng: random.Random) -> CodeSpec:
    """1..3 generators of 1..5 terms each; redrawn while every generator cancels to zero."""
    while True:
        gens = [random_sparse(ctx, rng) for _ in range(rng.randint(1, 3))]
        gens = [g for g in gens if g]
        if gens:
            return CodeSpec.from_generators(ctx, gens)


def random_orbit_union(ctx: AlgebraContext, rng: random.Random) -> OrbitSet:
    return OrbitSet(ctx, frozenset(o.representative for o in all_orbits(ctx) if rng.random() < 0.5))
