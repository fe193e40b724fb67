"""Command-line front end: thin JSON adapters over the library.

Exit codes: 0 success, 1 invalid input, 2 valid input whose mathematical
constraint is violated (non-Kulikov fiber, non-cyclotomic factor,
non-orientable complex, impossible fiber configuration). Reports are JSON
on stdout with sorted keys; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import autorders, corpus, degeneration, lattice
from .cyclotomic import NotCyclotomicProduct, bounded_orders
from .dualcomplex import (
    ComplexAutomorphism,
    DeltaComplex,
    InvalidComplex,
    NonOrientable,
    orient,
    orientation_action,
)
from .elliptic import FiberConfiguration, ImpossibleConfiguration
from .sncfiber import MissingBetti, NotKulikov, SNCSurface, classify, crosscheck, e1_page, grw_dims

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_CONSTRAINT = 2

_CONSTRAINT_ERRORS = (NotKulikov, NotCyclotomicProduct, NonOrientable, ImpossibleConfiguration)
_INPUT_ERRORS = (ValueError, KeyError, TypeError, InvalidComplex, MissingBetti, OSError, json.JSONDecodeError)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_BAD_INPUT)


def _read_payload(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _emit(command: str, inputs, result) -> None:
    report = {"command": command, "input": inputs, "result": result}
    print(json.dumps(report, indent=2, sort_keys=True))


def _summary(text: str) -> None:
    print(text, file=sys.stderr)


# -- subcommands -----------------------------------------------------------


def _cmd_classify_fiber(args) -> int:
    payload = _read_payload(args.payload)
    surface = SNCSurface.from_json_dict(payload)
    inputs = surface.to_json_dict()
    try:
        t = classify(surface)
    except NotKulikov as exc:
        _emit("classify-fiber", inputs, {"error": {"constraint": "NotKulikov", "detail": str(exc)}})
        _summary(f"not a Kulikov fiber: {exc}")
        return EXIT_CONSTRAINT
    result = {"type": str(t), "grw": list(grw_dims(t).dims)}
    if all(c.b2 is not None for c in surface.components):
        grid = e1_page(surface)
        result["e1"] = [
            {"p": p, "dims": [grid[(p, q)] for q in range(5)]} for p in range(-2, 3)
        ]
    result["crosscheck"] = crosscheck(surface).to_json_dict()
    _emit("classify-fiber", inputs, result)
    _summary(f"Type {t}, grw = {result['grw']}")
    return EXIT_OK


def _cmd_allowed_types(args) -> int:
    if args.m is None and args.field is None and args.height is None:
        raise ValueError("provide at least one of --m, --field, --height")
    height = None
    if args.height is not None:
        height = degeneration.INFINITE_HEIGHT if args.height in ("inf", "infinite") else int(args.height)
    field = degeneration.HodgeFieldClass(args.field) if args.field else None
    decision = degeneration.combine(m=args.m, e=field, h=height, residue_char=args.char)
    inputs = {"m": args.m, "field": args.field, "height": args.height, "char": args.char}
    _emit("allowed-types", inputs, decision.to_json_dict())
    if decision.outside_hypotheses:
        _summary("outside theorem hypotheses")
    else:
        _summary(f"allowed types: {sorted(str(t) for t in decision.allowed)}")
    return EXIT_OK


_SETTING_FACTORY = {
    "char0": lambda p: autorders.char0(),
    "liftable": autorders.liftable,
    "finite-height": autorders.finite_height,
    "finite-field": autorders.finite_field,
}


def _cmd_charpoly(args) -> int:
    if args.setting == "char0":
        if args.p is not None:
            raise ValueError("--p is only valid in a positive-characteristic setting")
        setting = autorders.char0()
    else:
        if args.p is None:
            raise ValueError(f"setting {args.setting!r} requires --p")
        setting = _SETTING_FACTORY[args.setting](args.p)
    candidates = autorders.admissible_transcendental_charpolys(
        args.m, setting, args.t_rank, rank_cap=args.rank_cap
    )
    rows = []
    for f in candidates:
        row = {
            "factors": {str(m): mult for m, mult in sorted(f.factors.items())},
            "coefficients": list(f.expand().coefficients),
            "single_power": autorders.is_single_power(f),
        }
        if setting.kind == autorders.FINITE_HEIGHT and not autorders.is_single_power(f):
            row["note"] = "multi-factor candidate, not excluded in the finite-height case"
        rows.append(row)
    inputs = {"m": args.m, "setting": args.setting, "p": args.p, "t_rank": args.t_rank}
    _emit("charpoly", inputs, {"candidates": rows})
    _summary(f"{len(rows)} admissible characteristic polynomial(s)")
    return EXIT_OK


def _cmd_orders(args) -> int:
    if (args.max_t is None) == (args.phi_bound is None):
        raise ValueError("provide exactly one of --max-t or --phi-bound")
    if args.max_t is not None:
        result = {"prime_powers": autorders.wild_prime_powers(args.max_t)}
        inputs = {"max_t": args.max_t}
        _summary(f"{len(result['prime_powers'])} prime powers")
    else:
        orders = bounded_orders(args.phi_bound)
        result = {"orders": orders, "max": max(orders)}
        inputs = {"phi_bound": args.phi_bound}
        _summary(f"{len(orders)} orders, max {max(orders)}")
    _emit("orders", inputs, result)
    return EXIT_OK


def _cmd_ss_check(args) -> int:
    sigma0 = autorders.nygaard_sigma0(args.m, args.p)
    result = {"sigma0": sigma0, "supersingular_possible": bool(sigma0)}
    _emit("ss-check", {"m": args.m, "p": args.p}, result)
    _summary(
        f"order {args.m} in characteristic {args.p}: "
        + (f"possible for sigma0 in {sigma0}" if sigma0 else "no supersingular surface admits it")
    )
    return EXIT_OK


def _cmd_orient(args) -> int:
    payload = _read_payload(args.payload)
    complex_ = DeltaComplex.from_json_dict(payload)
    inputs = complex_.to_json_dict()
    try:
        orientation = orient(complex_)
    except NonOrientable as exc:
        _emit("orient", inputs, {"error": {"constraint": "NonOrientable", "detail": str(exc)}})
        _summary(f"non-orientable: {exc}")
        return EXIT_CONSTRAINT
    result = {
        "orientable": True,
        "orientation": [
            {"triangle": tid, "sign": orientation[tid]} for tid in sorted(orientation, key=str)
        ],
    }
    if "automorphism" in payload:
        g = ComplexAutomorphism.from_json_dict(complex_, payload["automorphism"])
        result["action"] = orientation_action(complex_, g)
        inputs = {"complex": inputs, "automorphism": payload["automorphism"]}
    _emit("orient", inputs, result)
    _summary("orientable" + (f", action {result['action']:+d}" if "action" in result else ""))
    return EXIT_OK


def _cmd_euler(args) -> int:
    payload = _read_payload(args.payload)
    fibers = payload["fibers"] if isinstance(payload, dict) and "fibers" in payload else payload
    config = FiberConfiguration.from_json(fibers)
    inputs = {"fibers": config.to_json_dict(), "characteristic": args.characteristic}
    try:
        rank = config.trivial_lattice_rank()
    except ImpossibleConfiguration as exc:
        _emit("euler", inputs, {"error": {"constraint": "ImpossibleConfiguration", "detail": str(exc)}})
        _summary(str(exc))
        return EXIT_CONSTRAINT
    result = {
        "euler_sum": config.euler_sum(),
        "is_k3": config.check_k3(),
        "trivial_lattice_rank": rank,
    }
    if args.characteristic is not None and args.characteristic <= 3:
        result["warning"] = (
            "tame arithmetic only: wild fibers in characteristic <= 3 can contribute more"
        )
    _emit("euler", inputs, result)
    _summary(f"Euler sum {result['euler_sum']}, trivial lattice rank {rank}")
    return EXIT_OK


def _cmd_lattice(args) -> int:
    lat = lattice.direct_sum(*(lattice.standard_lattice(n) for n in args.names))
    if args.rescale is not None:
        lat = lattice.rescale(lat, args.rescale)
    result = {
        "gram": [list(row) for row in lat.gram],
        "rank": lat.rank(),
        "det": lat.det(),
        "signature": list(lat.signature()),
        "even": lat.is_even(),
    }
    _emit("lattice", {"names": args.names, "rescale": args.rescale}, result)
    _summary(f"rank {result['rank']}, det {result['det']}, signature {result['signature']}")
    return EXIT_OK


def _cmd_fixtures(args) -> int:
    directory = args.dir if args.dir is not None else corpus.default_corpus_dir()
    results = corpus.run_corpus(directory)
    passed = sum(1 for r in results if r.passed)
    result = {
        "total": len(results),
        "passed": passed,
        "failed": len(results) - passed,
        "fixtures": [
            {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
        ],
    }
    _emit("fixtures", {"directory": str(directory)}, result)
    for r in results:
        _summary(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}")
    _summary(f"{passed}/{len(results)} fixtures passed")
    return EXIT_OK if passed == len(results) else EXIT_CONSTRAINT


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="k3degen", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("classify-fiber", help="classify a semistable fiber into Kulikov types")
    p.add_argument("payload", help="path to an SNC surface JSON file, or - for stdin")
    p.set_defaults(func=_cmd_classify_fiber)

    p = sub.add_parser("allowed-types", help="degeneration types allowed by given constraints")
    p.add_argument("--m", type=int, help="order of the action on the 2-forms")
    p.add_argument(
        "--field",
        choices=[c.value for c in degeneration.HodgeFieldClass],
        help="Hodge endomorphism field class",
    )
    p.add_argument("--height", help="formal Brauer height: 1..10 or 'infinite'")
    p.add_argument("--char", type=int, help="residue characteristic, if known")
    p.set_defaults(func=_cmd_allowed_types)

    p = sub.add_parser("charpoly", help="admissible transcendental characteristic polynomials")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--setting", choices=sorted(_SETTING_FACTORY), default="char0")
    p.add_argument("--p", type=int, help="residue characteristic (positive-characteristic settings)")
    p.add_argument("--t-rank", type=int, required=True, dest="t_rank")
    p.add_argument("--rank-cap", type=int, default=autorders.DEFAULT_RANK_CAP, dest="rank_cap")
    p.set_defaults(func=_cmd_charpoly)

    p = sub.add_parser("orders", help="prime-power twists or all orders under a totient bound")
    p.add_argument("--max-t", type=int, dest="max_t", help="totient bound for prime powers")
    p.add_argument("--phi-bound", type=int, dest="phi_bound", help="totient bound for all orders")
    p.set_defaults(func=_cmd_orders)

    p = sub.add_parser("ss-check", help="supersingular order check: m | p^sigma0 + 1")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=_cmd_ss_check)

    p = sub.add_parser("orient", help="orient a Delta-complex, optionally push along a symmetry")
    p.add_argument("payload", help="path to a complex JSON file, or - for stdin")
    p.set_defaults(func=_cmd_orient)

    p = sub.add_parser("euler", help="Euler numbers and trivial lattice rank of a fiber multiset")
    p.add_argument("payload", help="path to a fiber multiset JSON file, or - for stdin")
    p.add_argument("--characteristic", type=int, help="residue characteristic, if known")
    p.set_defaults(func=_cmd_euler)

    p = sub.add_parser("lattice", help="invariants of named lattices and their direct sums")
    p.add_argument("names", nargs="+", help="lattice names: U, E8, K3, A<n>")
    p.add_argument("--rescale", type=int, help="multiply the form by a nonzero integer")
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("fixtures", help="replay the bundled example corpus")
    p.add_argument("--dir", help=f"corpus directory (default: bundled, or ${corpus.ENV_VAR})")
    p.set_defaults(func=_cmd_fixtures)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_BAD_INPUT
    try:
        return args.func(args)
    except _CONSTRAINT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
