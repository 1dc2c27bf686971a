"""Batch verification of the dimension identities on random codes."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from .algebra import AlgebraContext, CodeSpec
from .groebner import footprint
from .oracle import dimension_via_rank
from .orbits import is_q_closed
from .poly import ORDERINGS
from .sampling import random_generator_code, random_orbit_union
from .transform import code_from_defining_set, defining_set, dft, idempotent_of

PROPERTIES = (
    "three_way_dimension",
    "footprint_size_equals_defining_size",
    "defining_set_closed",
    "idempotent_laws",
    "idempotent_generates_code",
    "defining_set_roundtrip",
)


@dataclass
class CodeCheck:
    dimensions: dict[str, int]
    results: dict[str, bool]
    errors: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.results.values())


def check_code(spec: CodeSpec, orderings=tuple(ORDERINGS)) -> CodeCheck:
    """Run every invariant on one code; exceptions count as failures, not crashes."""
    ctx = spec.ctx
    res: dict[str, bool] = {}
    dims: dict[str, int] = {}
    errors: list[str] = []

    def attempt(name, fn):
        try:
            res[name] = bool(fn())
        except AssertionError as exc:
            res[name] = False
            errors.append(f"{name}: {exc}")

    D = defining_set(spec)
    dims["dft"] = ctx.n - len(D)
    feet = {}
    for name in orderings:
        feet[name] = footprint(spec, name)
        dims[f"groebner/{name}"] = ctx.n - len(feet[name])
    dims["rank"] = dimension_via_rank(spec)

    attempt("three_way_dimension", lambda: len(set(dims.values())) == 1)
    attempt("footprint_size_equals_defining_size", lambda: all(len(f) == len(D) for f in feet.values()))
    attempt("defining_set_closed", lambda: is_q_closed(ctx, D.members()))

    e = idempotent_of(spec)

    def idempotent_laws():
        if ctx.mul(e, e) != e:
            return False
        vec = dft(ctx, e)
        if any(v not in (0, 1) for v in vec.values):
            return False
        if e:
            De = defining_set(CodeSpec.from_generators(ctx, [e]))
        else:
            De = defining_set(CodeSpec.zero_code(ctx))
        return vec.support() == set(De.complement().members())

    attempt("idempotent_laws", idempotent_laws)

    def generates():
        if not e:
            return len(D) == ctx.n
        return defining_set(CodeSpec.from_generators(ctx, [e])) == D

    attempt("idempotent_generates_code", generates)
    attempt("defining_set_roundtrip", lambda: defining_set(code_from_defining_set(D)) == D)
    return CodeCheck(dims, res, errors)


@dataclass
class SelftestReport:
    q: int
    r: tuple[int, ...]
    seed: int
    trials: int
    passed: int = 0
    failed: int = 0
    properties: dict[str, Counter] = field(default_factory=dict)
    dimensions: list[int] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "r": list(self.r),
            "seed": self.seed,
            "trials": self.trials,
            "passed": self.passed,
            "failed": self.failed,
            "properties": {k: {"pass": c["pass"], "fail": c["fail"]} for k, c in self.properties.items()},
            "failures": self.failures,
        }


def run_selftest(ctx: AlgebraContext, trials: int, seed: int) -> SelftestReport:
    """Check ``trials`` random codes; even trials use random generators, odd ones random orbit unions."""
    rng = random.Random(seed)
    report = SelftestReport(ctx.q, ctx.r, seed, trials, properties={p: Counter() for p in PROPERTIES})
    for t in range(trials):
        if t % 2 == 0:
            spec = random_generator_code(ctx, rng)
        else:
            spec = code_from_defining_set(random_orbit_union(ctx, rng))
        try:
            chk = check_code(spec)
        except AssertionError as exc:
            report.failed += 1
            report.failures.append(f"trial {t}: {exc}")
            continue
        for name, ok in chk.results.items():
            report.properties[name]["pass" if ok else "fail"] += 1
        report.dimensions.append(chk.dimensions["rank"])
        if chk.ok:
            report.passed += 1
        else:
            report.failed += 1
            bad = [k for k, v in chk.results.items() if not v]
            report.failures.append(f"trial {t}: {', '.join(bad)} {chk.dimensions}")
    return report
