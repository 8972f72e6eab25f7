"""Command-line interface.

Load a poset from the text format or generate one, then inspect it:

    eventposet project --gen lattice:8,8 --chain P
    eventposet quantify --gen lattice:12,12 --interval 31 74 --chains P Q
    eventposet transform --m 4 --n 1 --pair 2 2
    eventposet verify

Usage errors exit with status 2 (argparse default), verification
failures with 1.
"""
from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from pathlib import Path

from .chains import ValuedChain
from .dotexport import export_dot
from .errors import EventPosetError
from .generators import generate_random, generate_simplex, standard_lattice
from .intervals import (
    GeneralizedInterval,
    classify_interval,
    decompose,
    distance_of_pair,
    interval_pair_two_chains,
    length_of_pair,
    pair,
)
from .poset import Poset
from .projection import classify_projection
from .spacetime import (
    PairTransform,
    apply_pair_transform,
    beta,
    gamma,
    interval_scalar,
    lorentz_matrix,
    minkowski_form,
    scalar_length,
    subspace_projection,
)
from .structure import (
    Betweenness,
    betweenness_of,
    collinearity_case,
    detect_linear_relation,
)
from .errors import MissingProjectionError
from .textio import format_poset_text, parse_poset_text
from .verify import run_all, run_for


def _load(args) -> tuple[Poset, dict[str, ValuedChain]]:
    if args.input:
        text = Path(args.input).read_text()
        return parse_poset_text(text)
    if args.gen:
        kind, _, rest = args.gen.partition(":")
        params = rest.split(",") if rest else []
        if kind == "lattice":
            if len(params) != 2:
                raise SystemExit("--gen lattice takes U,V")
            lattice = standard_lattice(int(params[0]), int(params[1]))
            return lattice.poset, lattice.chains
        if kind == "simplex":
            if len(params) != 1:
                raise SystemExit("--gen simplex takes N")
            return generate_simplex(int(params[0]))
        if kind == "random":
            if len(params) != 3:
                raise SystemExit("--gen random takes SEED,N,DENSITY")
            poset = generate_random(int(params[0]), int(params[1]), float(params[2]))
            return poset, {}
        raise SystemExit(f"unknown generator {kind!r}")
    raise SystemExit("one of --input or --gen is required")


def _chain(chains: dict[str, ValuedChain], name: str) -> ValuedChain:
    if name not in chains:
        raise SystemExit(f"no chain named {name!r}; available: {sorted(chains)}")
    return chains[name]


def _add_source_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", help="poset text file")
    parser.add_argument(
        "--gen",
        help="built-in generator: lattice:U,V | simplex:N | random:SEED,N,DENSITY",
    )


def _cmd_build(args) -> int:
    poset, chains = _load(args)
    if args.out:
        Path(args.out).write_text(format_poset_text(poset, chains))
    print(f"events {poset.event_count}")
    print(f"cover edges {len(poset.cover_edges())}")
    for name in sorted(chains):
        print(f"chain {name} length {len(chains[name])}")
    return 0


def _cmd_project(args) -> int:
    poset, chains = _load(args)
    vc = _chain(chains, args.chain)
    for event in poset.events():
        outcome = classify_projection(event, vc.chain)
        fwd = vc.value_of(outcome.forward) if outcome.forward is not None else "."
        bwd = vc.value_of(outcome.backward) if outcome.backward is not None else "."
        print(f"{event} ({fwd},{bwd})")
    return 0


def _cmd_classify(args) -> int:
    poset, chains = _load(args)
    p = _chain(chains, args.chains[0])
    q = _chain(chains, args.chains[1])
    for event in poset.events():
        try:
            case = collinearity_case(event, p.chain, q.chain)
            side = betweenness_of(event, p.chain, q.chain)
        except MissingProjectionError:
            print(f"{event} - -")
            continue
        side_text = side.value if side is not Betweenness.NONE else "-"
        print(f"{event} {case.value} {side_text}")
    return 0


def _cmd_relate(args) -> int:
    _, chains = _load(args)
    s = _chain(chains, args.chains[0])
    p = _chain(chains, args.chains[1])
    try:
        relation = detect_linear_relation(s, p)
    except EventPosetError as exc:
        print(f"not linearly related: {exc}")
        return 1
    print(f"m = {relation.m}")
    print(f"n = {relation.n}")
    return 0


def _print_pair_report(interval_pair) -> None:
    symmetric, antisymmetric = decompose(interval_pair)
    classification = classify_interval(interval_pair)
    scalar = interval_scalar(interval_pair)
    print(f"pair = {interval_pair}")
    print(f"symmetric part = {symmetric}")
    print(f"antisymmetric part = {antisymmetric}")
    purity = "pure " if classification.pure else ""
    print(f"class = {purity}{classification.kind.value}")
    print(f"length = {length_of_pair(interval_pair)}")
    print(f"distance = {distance_of_pair(interval_pair)}")
    print(f"scalar = {scalar.value} ({scalar.character.value})")


def _cmd_quantify(args) -> int:
    _, chains = _load(args)
    p = _chain(chains, args.chains[0])
    q = _chain(chains, args.chains[1])
    interval = GeneralizedInterval(args.interval[0], args.interval[1])
    _print_pair_report(interval_pair_two_chains(interval, p, q))
    return 0


def _cmd_transform(args) -> int:
    transform = PairTransform(Fraction(args.m), Fraction(args.n))
    source = pair(Fraction(args.pair[0]), Fraction(args.pair[1]))
    moved = apply_pair_transform(source, transform)
    matrix = lorentz_matrix(transform)
    print(f"pair' = {moved}")
    print(f"beta = {beta(transform)}")
    print(f"gamma = {gamma(transform)}")
    print(f"matrix = [[{matrix[0][0]}, {matrix[0][1]}], [{matrix[1][0]}, {matrix[1][1]}]]")
    return 0


def _cmd_scalar(args) -> int:
    source = pair(Fraction(args.pair[0]), Fraction(args.pair[1]))
    scalar = interval_scalar(source)
    sigma = scalar_length(source)
    _, dt2, dx2 = minkowski_form(source)
    print(f"scalar = {scalar.value} ({scalar.character.value})")
    print(f"sigma = {sigma}")
    print(f"dt^2 = {dt2}")
    print(f"dx^2 = {dx2}")
    return 0


def _cmd_dot(args) -> int:
    _, chains = _load(args)
    p = _chain(chains, args.chains[0])
    q = _chain(chains, args.chains[1])
    x, y = args.x, args.y
    value = subspace_projection(x, y, p, q)
    for event in (x, y):
        try:
            side = betweenness_of(event, p.chain, q.chain)
        except MissingProjectionError:
            side = Betweenness.NONE
        if side is not Betweenness.BETWEEN:
            print(f"note: endpoint {event} is outside the chain slab (extrapolated)")
    print(f"projection = {value}")
    return 0


def _cmd_verify(args) -> int:
    if args.input or args.gen:
        poset, chains = _load(args)
        results = run_for(poset, chains, report=print)
    else:
        results = run_all(report=print)
    failures = [r for r in results if not r.passed]
    print(f"{len(results) - len(failures)}/{len(results)} checks passed")
    return 1 if failures else 0


def _cmd_export(args) -> int:
    poset, chains = _load(args)
    text = export_dot(poset, chains, mode=args.mode)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


_RATIONAL_TOKEN = re.compile(r"^-\d+(/\d+)?$")


def _accept_negative_rationals(parser: argparse.ArgumentParser) -> None:
    # argparse treats "-3/2" as an option name; widen its negative-number
    # detection so rational pair components parse as values.
    if hasattr(parser, "_negative_number_matcher"):
        parser._negative_number_matcher = _RATIONAL_TOKEN


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eventposet",
        description="Quantify event posets by chain projection.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="load or generate a poset, print a summary")
    _add_source_args(build)
    build.add_argument("--out", help="write the poset text format here")
    build.set_defaults(fn=_cmd_build)

    project = sub.add_parser("project", help="per-event projection pair table")
    _add_source_args(project)
    project.add_argument("--chain", required=True)
    project.set_defaults(fn=_cmd_project)

    classify = sub.add_parser("classify", help="collinearity case per event")
    _add_source_args(classify)
    classify.add_argument("--chains", nargs=2, required=True, metavar=("P", "Q"))
    classify.set_defaults(fn=_cmd_classify)

    relate = sub.add_parser("relate", help="projection step lengths of S onto P")
    _add_source_args(relate)
    relate.add_argument("--chains", nargs=2, required=True, metavar=("S", "P"))
    relate.set_defaults(fn=_cmd_relate)

    quantify = sub.add_parser("quantify", help="interval pair and derived measures")
    _add_source_args(quantify)
    quantify.add_argument("--interval", nargs=2, type=int, required=True, metavar=("A", "B"))
    quantify.add_argument("--chains", nargs=2, required=True, metavar=("P", "Q"))
    quantify.set_defaults(fn=_cmd_quantify)

    transform = sub.add_parser("transform", help="apply a pair transform")
    transform.add_argument("--m", required=True)
    transform.add_argument("--n", required=True)
    transform.add_argument("--pair", nargs=2, required=True, metavar=("DP", "DQ"))
    transform.set_defaults(fn=_cmd_transform)
    _accept_negative_rationals(transform)

    scalar = sub.add_parser("scalar", help="interval scalar of a pair")
    scalar.add_argument("--pair", nargs=2, required=True, metavar=("DP", "DQ"))
    scalar.set_defaults(fn=_cmd_scalar)
    _accept_negative_rationals(scalar)

    dot = sub.add_parser("dot", help="subspace projection of an interval")
    _add_source_args(dot)
    dot.add_argument("--x", type=int, required=True)
    dot.add_argument("--y", type=int, required=True)
    dot.add_argument("--chains", nargs=2, required=True, metavar=("P", "Q"))
    dot.set_defaults(fn=_cmd_dot)

    verify = sub.add_parser("verify", help="run the invariant suite")
    _add_source_args(verify)
    verify.set_defaults(fn=_cmd_verify)

    export = sub.add_parser("export", help="DOT text in hasse or geometric view")
    _add_source_args(export)
    export.add_argument("--mode", choices=("hasse", "geometric"), default="hasse")
    export.add_argument("--out")
    export.set_defaults(fn=_cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except EventPosetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    raise SystemExit(main())
