"""Defining sets, the multidimensional DFT over L, and idempotents.

The DFT sends a canonical element ``f`` to its values ``f(alpha^m)`` at every
index ``m``; it is an algebra isomorphism onto L^n with the coordinatewise
product.  The inverse is scaled by ``1/n`` (n = r1*...*rs, a unit because the
algebra is semisimple).
"""

from __future__ import annotations

from .algebra import AlgebraContext, CodeSpec, DFTVector
from .errors import ContextMismatch, NotInBaseField
from .orbits import OrbitSet, all_orbits, orbit_set_from
from .poly import Polynomial


def defining_set(spec: CodeSpec) -> OrbitSet:
    """Indices m at which every generator vanishes at alpha^m."""
    ctx = spec.ctx
    if spec.zero:
        return OrbitSet.full(ctx)
    if spec.defining is not None:
        return spec.defining
    zeros = [m for m in ctx.indices() if all(ctx.evaluate(g, m) == 0 for g in spec.generators)]
    D = orbit_set_from(ctx, zeros)
    if not D.input_was_closed:
        raise AssertionError(f"zero set {zeros} is not a union of q-orbits")
    return D


def dft(ctx: AlgebraContext, f: Polynomial) -> DFTVector:
    return DFTVector(ctx, tuple(ctx.evaluate(f, m) for m in ctx.indices()))


def star_mul(u: DFTVector, v: DFTVector) -> DFTVector:
    if u.ctx != v.ctx:
        raise ContextMismatch("DFT vectors from different contexts")
    L = u.ctx.L
    return DFTVector(u.ctx, tuple(L.mul(a, b) for a, b in zip(u.values, v.values)))


def inverse_dft(u: DFTVector) -> Polynomial:
    """The canonical element over L whose DFT is ``u``."""
    ctx = u.ctx
    L, r, pw = ctx.L, ctx.r, ctx.alpha_powers
    pts = list(ctx.indices())
    nonzero = [(k, val) for k, val in zip(pts, u.values) if val]
    terms = {}
    for m in pts:
        acc = 0
        for k, val in nonzero:
            t = val
            for i in range(ctx.s):
                t = L.mul(t, pw[i][(-m[i] * k[i]) % r[i]])
            acc = L.add(acc, t)
        if acc:
            terms[m] = L.mul(acc, ctx.n_inverse)
    return Polynomial(L, ctx.s, terms)


def to_base_field(ctx: AlgebraContext, f: Polynomial) -> Polynomial:
    """Reinterpret an L-polynomial whose coefficients all lie in GF(q)."""
    if f.field == ctx.field:
        return f
    bad = {m: c for m, c in f.terms.items() if c >= ctx.q}
    if bad:
        raise NotInBaseField(f"coefficients outside GF({ctx.q}) at {sorted(bad)}")
    return Polynomial(ctx.field, ctx.s, f.terms)


def indicator(ctx: AlgebraContext, members) -> DFTVector:
    mset = set(members)
    return DFTVector(ctx, tuple(1 if m in mset else 0 for m in ctx.indices()))


def generating_idempotent(D: OrbitSet) -> Polynomial:
    """Idempotent of the code with defining set ``D``: inverse DFT of the indicator of I minus D."""
    ctx = D.ctx
    keep = D.complement()
    return to_base_field(ctx, inverse_dft(indicator(ctx, keep.members())))


def primitive_idempotents(ctx: AlgebraContext) -> list[Polynomial]:
    """One primitive idempotent per q-orbit, sorted by orbit representative."""
    return [
        generating_idempotent(OrbitSet(ctx, frozenset([o.representative])).complement())
        for o in all_orbits(ctx)
    ]


def code_from_defining_set(Q: OrbitSet) -> CodeSpec:
    """Generator form of the unique code whose defining set is ``Q``."""
    ctx = Q.ctx
    if len(Q) == ctx.n:
        return CodeSpec.zero_code(ctx)
    spec = CodeSpec.from_generators(ctx, [generating_idempotent(Q)])
    if defining_set(spec) != Q:
        raise AssertionError(f"idempotent round trip failed for {Q}")
    return spec


def as_generators(spec: CodeSpec) -> CodeSpec:
    """Return ``spec`` itself, or its generator form when it is given by a defining set."""
    if spec.defining is not None:
        return code_from_defining_set(spec.defining)
    return spec


def idempotent_of(spec: CodeSpec) -> Polynomial:
    """Generating idempotent of any code spec (zero for the zero code)."""
    if spec.zero:
        return spec.ctx.zero()
    return generating_idempotent(defining_set(spec))


def dimension_from_defining_set(spec: CodeSpec) -> int:
    return spec.ctx.n - len(defining_set(spec))
