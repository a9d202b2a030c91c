"""``central-parts`` command line.

Exit codes: 0 success, 1 failed verification, 2 bad input, 3 disconnected
graph.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import numpy as np

from . import checks, scan, spectral
from .constructions import build_gch
from .counting import CountMode
from .generators import FAMILY_NAMES, parse_generator_spec
from .graph import Graph, GraphError, NotConnectedError, parse_edge_list, serialize
from .report import PART_NAMES, compute_parts

EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_DISCONNECTED = 3

log = logging.getLogger("central_parts")


class InputError(Exception):
    pass


def _load(args: argparse.Namespace) -> tuple[Graph, str]:
    if args.input and args.gen:
        raise InputError("give either --input or --gen, not both")
    if args.gen:
        try:
            return parse_generator_spec(args.gen), args.gen
        except ValueError as exc:
            raise InputError(str(exc)) from None
    if not args.input:
        raise InputError("one of --input or --gen is required")
    path = Path(args.input)
    try:
        text = sys.stdin.read() if args.input == "-" else path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc}") from None
    try:
        g = parse_edge_list(text)
    except GraphError as exc:
        raise InputError(f"{args.input}: {exc}") from None
    if g.n == 0:
        raise InputError(f"{args.input}: no edges")
    return g, path.name


def _dump(obj: object) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def cmd_compute(args: argparse.Namespace) -> int:
    g, name = _load(args)
    parts = [p.strip() for p in args.parts.split(",")] if args.parts else list(PART_NAMES)
    bad = [p for p in parts if p not in PART_NAMES]
    if bad:
        raise InputError(f"unknown part(s) {bad}; choose from {', '.join(PART_NAMES)}")
    if not g.is_connected():
        raise NotConnectedError(f"{name}: graph not connected")
    rep = compute_parts(g, parts, CountMode(args.mode), name)
    print(rep.to_table() if args.format == "table" else rep.to_json(args.timings))
    return 0


def cmd_gch(args: argparse.Namespace) -> int:
    g, name = _load(args)
    res = build_gch(g)
    h = res.graph
    if args.emit == "edges":
        sys.stdout.write(serialize(h))
        return 0
    space = spectral.fiedler_space(h)
    chi = spectral.characteristic_center(h, space)
    lap = spectral.laplacian(h)
    resid = float(np.abs(lap @ res.expected_fiedler - res.expected_mu * res.expected_fiedler).max())
    out = {
        "graph_name": name,
        "n": g.n,
        "m": g.m,
        "gch_n": h.n,
        "gch_m": h.m,
        "expected_mu": res.expected_mu,
        "mu": space.mu,
        "mu_error": abs(space.mu - res.expected_mu),
        "fiedler_multiplicity": space.multiplicity,
        "expected_fiedler": res.expected_fiedler.tolist(),
        "expected_fiedler_residual": resid,
        "characteristic_center": h.sorted_labels(chi),
        "characteristic_center_is_input": h.label_set(chi) == set(g.labels),
    }
    print(_dump(out))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.list:
        for name in checks.CHECKS:
            print(name)
        return 0
    names = args.check or None
    unknown = [c for c in names or () if c not in checks.CHECKS]
    if unknown:
        raise InputError(f"unknown check(s) {unknown}; see verify --list")
    results = checks.run_checks(names)
    failed = 0
    for name, problems in results.items():
        print(f"{'PASS' if not problems else 'FAIL'}  {name}")
        for p in problems:
            print(f"      {p}")
        failed += bool(problems)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_FAILED if failed else 0


def cmd_scan(args: argparse.Namespace) -> int:
    if not (args.random or args.trees or args.gen):
        raise InputError("scan needs --random N, --trees N or --gen SPEC")
    if args.n < 1 or not 0.0 <= args.p <= 1.0:
        raise InputError("need --n >= 1 and 0 <= --p <= 1")
    specs = scan.plan(args.random, args.trees, args.n, args.p, args.seed, args.gen or ())
    try:
        for s in specs:
            if s.kind == "family":
                parse_generator_spec(s.family)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    report = scan.run_scan(specs, CountMode(args.mode), args.jobs)
    report["parameters"] = {
        "random": args.random,
        "trees": args.trees,
        "n": args.n,
        "p": args.p,
        "seed": args.seed,
        "families": args.gen or [],
    }
    for cx in report["counterexamples"]:
        kind = "THEOREM VIOLATION" if cx["proven"] else "CONJECTURE COUNTEREXAMPLE"
        print(f"*** {kind}: sample {cx['index']}, {cx['part']} not in one block", file=sys.stderr)
        print(cx["edges"], file=sys.stderr)
    print(_dump(report))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="central-parts",
        description="Central parts of connected graphs.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log diagnostics to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_source(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", metavar="FILE", help="edge-list file, '-' for stdin")
        p.add_argument(
            "--gen",
            metavar="FAMILY:ARGS",
            help=f"generated graph, e.g. path:6 or circulant:8,1,3 ({', '.join(FAMILY_NAMES)})",
        )

    p = sub.add_parser("compute", help="compute central parts")
    graph_source(p)
    p.add_argument("--parts", metavar="LIST", help=f"comma list from {','.join(PART_NAMES)}")
    p.add_argument("--mode", choices=[m.value for m in CountMode], default="induced")
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.add_argument("--timings", action="store_true", help="add timings_ms to the JSON")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("gch", help="build the supergraph whose characteristic center is the input")
    graph_source(p)
    p.add_argument("--emit", choices=["json", "edges"], default="json")
    p.set_defaults(func=cmd_gch)

    p = sub.add_parser("verify", help="run the golden fixture checks")
    p.add_argument("--list", action="store_true", help="list check names without running")
    p.add_argument("--check", action="append", metavar="NAME", help="run only this check")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="collect block-containment evidence on random graphs")
    p.add_argument("--random", type=int, default=0, metavar="N", help="connected G(n, p) samples")
    p.add_argument("--trees", type=int, default=0, metavar="N", help="uniform random trees")
    p.add_argument("--gen", action="append", metavar="FAMILY:ARGS", help="add a fixed graph")
    p.add_argument("--n", type=int, default=10, metavar="K")
    p.add_argument("--p", type=float, default=0.3, metavar="P")
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p.add_argument("--mode", choices=[m.value for m in CountMode], default="induced")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotConnectedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED


if __name__ == "__main__":
    sys.exit(main())
