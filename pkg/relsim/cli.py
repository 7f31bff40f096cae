# relsim/cli.py
"""
The ``relsim`` command.

Exit codes: 0 when everything passes, 1 when any theorem check fails,
2 for usage, parse, precondition and I/O errors.
"""
import argparse
import sys
from typing import Sequence

import structlog

from relsim import __version__
from relsim.config import settings
from relsim.core.errors import RelsimError
from relsim.core.logging import configure_logging
from relsim.modules.groups import read_group_element
from relsim.modules.lattice import EventSet, finer_than, format_blocks, format_events, join, meet, read_events, read_relation
from relsim.modules.relations import RealSubgroupSpec, classify_subgroup, format_relation_spec, parse_relation_spec, restrict
from relsim.modules.scalar import parse_scalar_list
from relsim.modules.spacetime import format_tuple
from relsim.modules.synchrony import (
    causality_witness,
    lightcone_image,
    one_way_speed,
    parse_coords,
    parse_direction,
    two_way_speed,
)
from relsim.services import render, run_suite

log = structlog.get_logger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _verify(args) -> int:
    reports = run_suite(args.suite, args.seed, args.report, args.format)
    sys.stdout.write(render(reports, args.format))
    return EXIT_FAIL if any(r.failed for r in reports) else EXIT_OK


def _partition(args) -> int:
    X = read_events(args.events)
    r1, r2 = read_relation(args.rel1, X), read_relation(args.rel2, X)
    if args.op == "finer":
        print("true" if finer_than(r1, r2) else "false")
    else:
        sys.stdout.write(format_blocks(meet(r1, r2) if args.op == "meet" else join(r1, r2)))
    return EXIT_OK


def _transform(args) -> int:
    g = read_group_element(args.group_element)
    X = read_events(args.events)
    image = EventSet(((ident, g.apply(e)) for ident, e in X), name=f"image of {X.name}")
    sys.stdout.write(format_events(image))
    return EXIT_OK


def _classify(args) -> int:
    spec = RealSubgroupSpec.generated(parse_scalar_list(args.gens, source="--gens"))
    print(classify_subgroup(spec))
    return EXIT_OK


def _relation(args) -> int:
    spec = parse_relation_spec(args.spec, source="--spec")
    X = read_events(args.events)
    R = restrict(spec, X)
    log.debug("Relation restricted", spec=format_relation_spec(spec), events=len(X), blocks=R.block_count)
    sys.stdout.write(format_blocks(R))
    return EXIT_OK


def _synchrony(args) -> int:
    phi = parse_coords(args.coords, source="--coords")
    if args.op == "speed":
        n = parse_direction(args.dir, source="--dir")
        print(f"one-way {one_way_speed(phi, n)}")
        print(f"two-way {two_way_speed(phi, n)}")
    elif args.op == "witness":
        witness = causality_witness(phi)
        if witness is None:
            print("none")
        else:
            p, q = witness.pair()
            print(f"v {format_tuple(witness.v)}")
            print(f"pair {p} {q}")
    else:
        for row in lightcone_image(phi).rows:
            print(" ".join(str(x).replace(" ", "") for x in row))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="relsim", description="Exact checks of invariant simultaneity relations")
    parser.add_argument("--version", action="version", version=f"relsim {__version__}")
    parser.add_argument("--log-level", default=settings.LOG_LEVEL, help="structlog level (default from RELSIM_LOG_LEVEL)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the theorem suite")
    p.add_argument("--suite", default="all", help="'all' or a comma list of theorem ids")
    p.add_argument("--seed", type=int, default=settings.SEED)
    p.add_argument("--report", default=settings.REPORT_PATH, help="also write the report to this path")
    p.add_argument("--format", choices=["text", "json"], default=settings.REPORT_FORMAT)
    p.set_defaults(func=_verify)

    p = sub.add_parser("partition", help="meet, join or refinement of two relations")
    p.add_argument("op", choices=["meet", "join", "finer"])
    p.add_argument("--events", required=True)
    p.add_argument("--rel1", required=True)
    p.add_argument("--rel2", required=True)
    p.set_defaults(func=_partition)

    p = sub.add_parser("transform", help="apply a group element to an event file")
    p.add_argument("--group-element", required=True)
    p.add_argument("--events", required=True)
    p.set_defaults(func=_transform)

    p = sub.add_parser("classify-subgroup", help="zero, cyclic or dense")
    p.add_argument("--gens", required=True, help="Scalar literals separated by ';'")
    p.set_defaults(func=_classify)

    p = sub.add_parser("relation", help="relation-spec operations")
    p.add_argument("op", choices=["restrict"])
    p.add_argument("--spec", required=True)
    p.add_argument("--events", required=True)
    p.set_defaults(func=_relation)

    p = sub.add_parser("synchrony", help="light speeds, causality witness and cone image")
    p.add_argument("op", choices=["speed", "witness", "cone"])
    p.add_argument("--coords", required=True)
    p.add_argument("--dir", default="(1,0,0)")
    p.set_defaults(func=_synchrony)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    configure_logging(args.log_level, settings.LOG_JSON)
    try:
        return args.func(args)
    except (RelsimError, OSError) as e:
        print(f"relsim: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
