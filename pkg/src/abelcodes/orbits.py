"""q-orbits of the index set and the lattice of their unions."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .algebra import AlgebraContext

Exponent = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Orbit:
    representative: Exponent
    members: tuple[Exponent, ...]

    def __len__(self):
        return len(self.members)

    def __contains__(self, m):
        return tuple(m) in self.members


def q_orbit(ctx: AlgebraContext, m) -> Orbit:
    """Cycle of ``m`` under coordinatewise multiplication by q."""
    start = ctx.check_index(m)
    q, r = ctx.q, ctx.r
    seen = [start]
    cur = start
    for _ in range(ctx.lcm):
        cur = tuple(a * q % ri for a, ri in zip(cur, r))
        if cur == start:
            break
        seen.append(cur)
    else:
        raise AssertionError(f"orbit of {start} did not close within lcm(r) = {ctx.lcm} steps")
    members = tuple(sorted(seen))
    return Orbit(members[0], members)


@lru_cache(maxsize=64)
def all_orbits(ctx: AlgebraContext) -> tuple[Orbit, ...]:
    """Partition of the index set into q-orbits, sorted by representative."""
    rep: dict[Exponent, Exponent] = {}
    out = []
    for m in ctx.indices():
        if m in rep:
            continue
        o = q_orbit(ctx, m)
        for u in o.members:
            rep[u] = o.representative
        out.append(o)
    return tuple(sorted(out))


@lru_cache(maxsize=64)
def _rep_table(ctx: AlgebraContext) -> dict[Exponent, Exponent]:
    return {u: o.representative for o in all_orbits(ctx) for u in o.members}


@lru_cache(maxsize=64)
def _orbit_by_rep(ctx: AlgebraContext) -> dict[Exponent, Orbit]:
    return {o.representative: o for o in all_orbits(ctx)}


def representative(ctx: AlgebraContext, m) -> Exponent:
    return _rep_table(ctx)[ctx.check_index(m)]


@dataclass(frozen=True)
class OrbitSet:
    """A union of q-orbits, stored as the set of orbit representatives.

    ``input_was_closed`` records whether the member list it was built from was
    already a union of orbits; it does not take part in equality.
    """

    ctx: AlgebraContext
    representatives: frozenset
    input_was_closed: bool = field(default=True, compare=False)

    def __post_init__(self):
        reps = _orbit_by_rep(self.ctx)
        bad = [m for m in self.representatives if m not in reps]
        if bad:
            raise ValueError(f"not orbit representatives: {sorted(bad)}")

    @classmethod
    def empty(cls, ctx):
        return cls(ctx, frozenset())

    @classmethod
    def full(cls, ctx):
        return cls(ctx, frozenset(o.representative for o in all_orbits(ctx)))

    def orbits(self) -> list[Orbit]:
        table = _orbit_by_rep(self.ctx)
        return [table[m] for m in sorted(self.representatives)]

    def members(self) -> list[Exponent]:
        return sorted(u for o in self.orbits() for u in o.members)

    def __iter__(self):
        return iter(self.members())

    def __len__(self):
        table = _orbit_by_rep(self.ctx)
        return sum(len(table[m]) for m in self.representatives)

    def __contains__(self, m):
        m = tuple(m)
        if not self.ctx.in_box(m):
            return False
        return _rep_table(self.ctx)[m] in self.representatives

    def mask(self) -> int:
        """Membership bitmap over the column enumeration of the index set."""
        bits = 0
        for m in self.members():
            bits |= 1 << self.ctx.index_of(m)
        return bits

    def _same(self, other):
        if not isinstance(other, OrbitSet) or other.ctx != self.ctx:
            raise ValueError("orbit sets from different contexts")

    def union(self, other: OrbitSet) -> OrbitSet:
        self._same(other)
        return OrbitSet(self.ctx, self.representatives | other.representatives)

    def intersection(self, other: OrbitSet) -> OrbitSet:
        self._same(other)
        return OrbitSet(self.ctx, self.representatives & other.representatives)

    def complement(self) -> OrbitSet:
        all_reps = frozenset(o.representative for o in all_orbits(self.ctx))
        return OrbitSet(self.ctx, all_reps - self.representatives)

    __or__ = union
    __and__ = intersection

    def issubset(self, other: OrbitSet) -> bool:
        self._same(other)
        return self.representatives <= other.representatives

    def to_json(self) -> list[list[int]]:
        return [list(m) for m in self.members()]

    def __repr__(self):
        return f"OrbitSet({self.members()})"


def is_q_closed(ctx: AlgebraContext, members: Iterable) -> bool:
    s = {tuple(m) for m in members}
    q, r = ctx.q, ctx.r
    return all(tuple(a * q % ri for a, ri in zip(m, r)) in s for m in s)


def orbit_set_from(ctx: AlgebraContext, members: Iterable) -> OrbitSet:
    """Smallest union of orbits containing ``members``."""
    members = [ctx.check_index(m) for m in members]
    table = _rep_table(ctx)
    reps = frozenset(table[m] for m in members)
    return OrbitSet(ctx, reps, input_was_closed=is_q_closed(ctx, members))


def complement(Q: OrbitSet) -> OrbitSet:
    return Q.complement()


def all_orbit_unions(ctx: AlgebraContext):
    """Every union of orbits, in bitmask order over the sorted orbit list."""
    orbs = all_orbits(ctx)
    for bits in range(1 << len(orbs)):
        yield OrbitSet(ctx, frozenset(o.representative for k, o in enumerate(orbs) if bits >> k & 1))
