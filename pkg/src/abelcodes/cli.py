"""Command-line front end.

Exit codes: 0 success, 2 invalid input (arguments, document schema,
polynomial syntax), 3 algebra not semisimple, 4 cross-method mismatch or
selftest failure, 5 problem too large for the rank oracle.
"""

from __future__ import annotations

import argparse
import json
import logging
import secrets
import sys

import jsonschema

from .algebra import AlgebraContext, CodeSpec
from .crosscheck import run_selftest
from .errors import (
    IndexOutOfRange,
    MatrixTooLarge,
    NonCoprime,
    NotPrime,
    NotSemisimple,
    PolynomialSyntaxError,
    SpecError,
)
from .groebner import footprint, groebner_basis
from .oracle import dimension_via_rank, spanning_matrix
from .orbits import all_orbits, orbit_set_from
from .poly import ORDERINGS, get_ordering
from .transform import defining_set, dimension_from_defining_set, idempotent_of, primitive_idempotents

log = logging.getLogger("abelcodes")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NOT_SEMISIMPLE = 3
EXIT_MISMATCH = 4
EXIT_TOO_LARGE = 5

SPEC_SCHEMA = {
    "type": "object",
    "properties": {
        "q": {"type": "integer", "minimum": 2},
        "r": {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 1},
        "generators": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "defining_set": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        },
        "zero": {"const": True},
        "options": {
            "type": "object",
            "properties": {
                "ordering": {"enum": sorted(ORDERINGS)},
                "format": {"enum": ["json", "table"]},
            },
            "additionalProperties": False,
        },
    },
    "required": ["q", "r"],
    "oneOf": [
        {"required": ["generators"]},
        {"required": ["defining_set"]},
        {"required": ["zero"]},
    ],
    "additionalProperties": False,
}


class CliError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def load_spec(path: str) -> tuple[CodeSpec, dict]:
    """Read a code document; returns the spec and its ``options`` block."""
    try:
        with open(path) if path != "-" else sys.stdin as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise CliError(EXIT_INPUT, f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_INPUT, f"{path}: invalid JSON: {exc}") from exc
    try:
        jsonschema.validate(doc, SPEC_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise CliError(EXIT_INPUT, f"{path}: schema error: {exc.message}") from exc
    ctx = make_context(doc["q"], doc["r"])
    try:
        if "generators" in doc:
            spec = CodeSpec.from_generators(ctx, doc["generators"])
        elif "defining_set" in doc:
            D = orbit_set_from(ctx, doc["defining_set"])
            if not D.input_was_closed:
                raise CliError(EXIT_INPUT, f"{path}: defining_set is not a union of {ctx.q}-orbits")
            spec = CodeSpec.from_defining_set(D)
        else:
            spec = CodeSpec.zero_code(ctx)
    except (PolynomialSyntaxError, IndexOutOfRange, SpecError) as exc:
        raise CliError(EXIT_INPUT, f"{path}: {exc}") from exc
    return spec, doc.get("options", {})


def make_context(q: int, r) -> AlgebraContext:
    try:
        return AlgebraContext(q, r)
    except NotPrime as exc:
        raise CliError(EXIT_INPUT, str(exc)) from exc
    except SpecError as exc:
        raise CliError(EXIT_INPUT, str(exc)) from exc
    except (NotSemisimple, NonCoprime) as exc:
        raise CliError(EXIT_NOT_SEMISIMPLE, f"not semisimple: {exc}") from exc


def _fmt(args, options, default):
    return args.format or options.get("format") or default


def _ordering(args, options):
    return get_ordering(args.ordering or options.get("ordering") or "grevlex")


def _exponents_table(members) -> str:
    return "\n".join("(" + ",".join(map(str, m)) + ")" for m in members)


def cmd_dim(args) -> int:
    spec, options = load_spec(args.spec)
    ctx = spec.ctx
    order = _ordering(args, options)
    methods = ["dft", "groebner", "rank"] if args.method == "all" else [args.method]
    dims = {}
    for method in methods:
        if method == "dft":
            dims["dft"] = dimension_from_defining_set(spec)
        elif method == "groebner":
            dims["groebner"] = ctx.n - len(footprint(spec, order))
        else:
            dims["rank"] = dimension_via_rank(spec)
    consistent = len(set(dims.values())) == 1
    if _fmt(args, options, "table") == "json":
        print(dumps({"q": ctx.q, "r": list(ctx.r), "n": ctx.n, "ordering": order.name,
                     "dimension": dims, "consistent": consistent}))
    else:
        for method, d in dims.items():
            label = f"groebner ({order.name})" if method == "groebner" else method
            print(f"{label:<20} {d}")
    if args.dump_matrix:
        print(spanning_matrix(spec).dump(), file=sys.stderr)
    if args.plot:
        from .plotting import plot_index_sets

        panels = {"defining set": defining_set(spec).members(), f"footprint ({order.name})": footprint(spec, order)}
        plot_index_sets(ctx, panels, args.plot, title=f"q={ctx.q}, r={list(ctx.r)}, dim={next(iter(dims.values()))}")
    if not consistent:
        print(f"dimension mismatch: {dims}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_defining_set(args) -> int:
    spec, options = load_spec(args.spec)
    members = defining_set(spec).members()
    if _fmt(args, options, "json") == "json":
        print(dumps([list(m) for m in members]))
    else:
        print(_exponents_table(members))
    if args.plot:
        from .plotting import plot_index_sets

        plot_index_sets(spec.ctx, {"defining set": members}, args.plot)
    return EXIT_OK


def cmd_footprint(args) -> int:
    spec, options = load_spec(args.spec)
    order = _ordering(args, options)
    feet = footprint(spec, order)
    fmt = _fmt(args, options, "json")
    if fmt == "json":
        print(dumps([list(m) for m in feet]))
    else:
        print(_exponents_table(feet))
    if args.show_basis:
        for g in groebner_basis(spec, order).format():
            print(g, file=sys.stderr)
    if args.plot:
        from .plotting import plot_index_sets

        plot_index_sets(spec.ctx, {f"footprint ({order.name})": feet}, args.plot)
    return EXIT_OK


def cmd_orbits(args) -> int:
    ctx = make_context(args.q, args.r)
    orbs = all_orbits(ctx)
    if (args.format or "json") == "json":
        print(dumps([[list(m) for m in o.members] for o in orbs]))
    else:
        for o in orbs:
            print(" ".join("(" + ",".join(map(str, m)) + ")" for m in o.members))
    return EXIT_OK


def cmd_idempotent(args) -> int:
    spec, options = load_spec(args.spec)
    text = str(idempotent_of(spec))
    print(dumps(text) if _fmt(args, options, "table") == "json" else text)
    return EXIT_OK


def cmd_primitive_idempotents(args) -> int:
    ctx = make_context(args.q, args.r)
    texts = [str(e) for e in primitive_idempotents(ctx)]
    if (args.format or "table") == "json":
        print(dumps(texts))
    else:
        print("\n".join(texts))
    return EXIT_OK


def cmd_selftest(args) -> int:
    ctx = make_context(args.q, args.r)
    seed = args.seed if args.seed is not None else secrets.randbits(64)
    report = run_selftest(ctx, args.trials, seed)
    if (args.format or "table") == "json":
        print(dumps(report.to_json()))
    else:
        print(f"seed {seed}")
        print(f"context q={ctx.q} r={list(ctx.r)} n={ctx.n}")
        print(f"trials {report.trials}: {report.passed} passed, {report.failed} failed")
        for name, c in report.properties.items():
            print(f"  {name:<38} pass {c['pass']:>5}  fail {c['fail']:>5}")
        for line in report.failures:
            print(f"  FAIL {line}")
    if args.plot:
        from .plotting import plot_dimension_histogram

        plot_dimension_histogram(report.dimensions, ctx.n, args.plot,
                                 title=f"q={ctx.q}, r={list(ctx.r)}, seed={seed}")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="abelcodes", description="Dimensions of abelian codes by three routes.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def spec_cmd(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("spec", help="code document (JSON), or - for stdin")
        p.add_argument("--format", choices=["json", "table"])
        p.set_defaults(func=fn)
        return p

    def ctx_cmd(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("q", type=int)
        p.add_argument("r", type=int, nargs="+")
        p.add_argument("--format", choices=["json", "table"])
        p.set_defaults(func=fn)
        return p

    p = spec_cmd("dim", cmd_dim, "code dimension")
    p.add_argument("--method", choices=["dft", "groebner", "rank", "all"], default="all")
    p.add_argument("--ordering", choices=sorted(ORDERINGS))
    p.add_argument("--dump-matrix", action="store_true", help="print the oracle's spanning matrix to stderr")
    p.add_argument("--plot", metavar="PNG", help="render defining set and footprint")

    p = spec_cmd("defining-set", cmd_defining_set, "defining set of a code")
    p.add_argument("--plot", metavar="PNG")

    p = spec_cmd("footprint", cmd_footprint, "footprint of a code")
    p.add_argument("--ordering", choices=sorted(ORDERINGS))
    p.add_argument("--show-basis", action="store_true", help="print the reduced Groebner basis to stderr")
    p.add_argument("--plot", metavar="PNG")

    spec_cmd("idempotent", cmd_idempotent, "generating idempotent of a code")
    ctx_cmd("orbits", cmd_orbits, "q-orbit partition of the index set")
    ctx_cmd("primitive-idempotents", cmd_primitive_idempotents, "primitive idempotents, one per orbit")

    p = ctx_cmd("selftest", cmd_selftest, "cross-check random codes")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int)
    p.add_argument("--plot", metavar="PNG", help="histogram of code dimensions")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"abelcodes: {exc}", file=sys.stderr)
        return exc.code
    except MatrixTooLarge as exc:
        print(f"abelcodes: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE


if __name__ == "__main__":
    sys.exit(main())
