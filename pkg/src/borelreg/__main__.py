from __future__ import annotations
import argparse
import sys
import traceback
from typing import Any, Optional
from sympy import isprime
from . import __version__
from .borel import (
    borel_failure_index,
    is_stable,
    is_strongly_stable_colon,
    sequential_chain,
)
from .config import OPERATIONS, FuzzConfig
from .decomposition import decompose
from .errors import Error, NotBorelTypeError, ParseError
from .fuzz import FuzzStats, fuzz_borel
from .invariants import compare_routes, report
from .logging import configure_logging, log
from .monomial import MonomialIdeal
from .oracle import betti_table
from .parser import format_ideal, ideal_to_json, parse_ideal
from .properties import run_properties
from .util import dump_json

#: Exit status for a failed verification or property run
EXIT_FAILURE = 2


def main(argv: Optional[list[str]] = None) -> None:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "file", None) is not None and args.ideal is not None:
        args.file.close()
        parser.error("give the ideal either as an argument or with --file")
    configure_logging(args.verbose)
    try:
        ok = args.func(args)
    except Error as e:
        if args.traceback:
            traceback.print_exc()
        else:
            print(f"borel: {type(e).__name__}: {e}", file=sys.stderr)
        print(dump_json(error_json(e)))
        sys.exit(1)
    if not ok:
        sys.exit(EXIT_FAILURE)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="borel",
        description=(
            "Regularity, a*-invariants, and local cohomology degrees of"
            " monomial ideals of Borel type"
        ),
    )
    parser.add_argument(
        "--traceback", action="store_true", help="Show full traceback on library error"
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="Show more log messages"
    )
    parser.add_argument(
        "-V", "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(title="commands", dest="command", required=True)

    p = sub.add_parser("check", help="Test whether an ideal is of Borel type")
    add_ideal_args(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser(
        "decompose", help="Show the irredundant irreducible decomposition"
    )
    add_ideal_args(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("chain", help="Show the sequential chain")
    add_ideal_args(p)
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser(
        "invariants", help="Compute local cohomology degrees and regularities"
    )
    add_ideal_args(p)
    p.add_argument(
        "-r",
        "--route",
        default="decomposition",
        help=(
            "Route to compute by: decomposition, chain, oracle, all, or the"
            " name of a registered plugin route  [default: decomposition]"
        ),
    )
    p.add_argument("--table", action="store_true", help="Output a text table")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("betti", help="Compute the graded Betti numbers of S/I")
    add_ideal_args(p)
    p.add_argument(
        "--field",
        type=field_characteristic,
        default=0,
        metavar="CHAR",
        help="Characteristic of the coefficient field (0 or a prime)  [default: 0]",
    )
    p.add_argument("--table", action="store_true", help="Output a Betti table")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("verify", help="Compare every route on an ideal")
    add_ideal_args(p)
    p.add_argument(
        "--no-oracle",
        dest="oracle",
        action="store_false",
        help="Do not run the Betti-number oracle",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="Generate random ideals of Borel type")
    add_config_args(p)
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("properties", help="Run the property checks")
    add_config_args(p)
    p.set_defaults(func=cmd_properties)
    return parser


def add_ideal_args(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "-f",
        "--file",
        type=argparse.FileType("r", encoding="utf-8"),
        help="Read the ideal from the given file ('-' for stdin)",
    )
    p.add_argument(
        "ideal",
        nargs="?",
        help="The ideal, as text or JSON; read from stdin if not given",
    )


def add_config_args(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "-c", "--config", metavar="FILE", help="Read settings from a TOML file"
    )
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--exp-max", type=int)
    p.add_argument(
        "--ops",
        type=parse_ops,
        help=f"Comma-separated subset of {','.join(OPERATIONS)}",
    )
    p.add_argument("--depth", type=int)
    p.add_argument("--pair-count", type=int)


def read_ideal(args: argparse.Namespace) -> MonomialIdeal:
    if args.ideal is not None:
        text = args.ideal
    elif args.file is not None:
        with args.file:
            text = args.file.read()
    else:
        text = sys.stdin.read()
    I = parse_ideal(text)
    log.debug("Parsed ideal: %s", format_ideal(I))
    return I


def load_config(args: argparse.Namespace) -> FuzzConfig:
    if args.config is not None:
        cfg = FuzzConfig.parse_toml_file(args.config)
    else:
        cfg = FuzzConfig()
    return cfg.with_overrides(
        seed=args.seed,
        count=args.count,
        n_max=args.n_max,
        exp_max=args.exp_max,
        ops=args.ops,
        depth=args.depth,
        pair_count=args.pair_count,
    )


def parse_ops(s: str) -> tuple[str, ...]:
    return tuple(op.strip() for op in s.split(",") if op.strip())


def field_characteristic(s: str) -> int:
    try:
        p = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {s!r}")
    if p != 0 and not isprime(p):
        raise argparse.ArgumentTypeError(f"must be 0 or a prime: {p}")
    return p


def error_json(e: Error) -> dict[str, Any]:
    data: dict[str, Any] = {
        "error": type(e).__name__,
        "message": e.message if isinstance(e, ParseError) else str(e),
        "position": None,
        "failing_index": None,
    }
    if isinstance(e, ParseError):
        data["position"] = e.position
    elif isinstance(e, NotBorelTypeError):
        data["failing_index"] = e.failing_index
    return data


def cmd_check(args: argparse.Namespace) -> bool:
    I = read_ideal(args)
    failing = borel_failure_index(I)
    print(
        dump_json(
            {
                "borel_type": failing is None,
                "failing_index": failing,
                "stable": is_stable(I),
                "strongly_stable": is_strongly_stable_colon(I),
            }
        )
    )
    return True


def cmd_decompose(args: argparse.Namespace) -> bool:
    print(dump_json(decompose(read_ideal(args)).for_json()))
    return True


def cmd_chain(args: argparse.Namespace) -> bool:
    print(dump_json(sequential_chain(read_ideal(args)).for_json()))
    return True


def cmd_invariants(args: argparse.Namespace) -> bool:
    I = read_ideal(args)
    if args.route != "all":
        r = report(I, args.route)
        print(r.render() if args.table else dump_json(r.for_json()))
        return True
    comparison = compare_routes(I)
    reports = comparison.reports
    if args.table:
        print("\n\n".join(r.render() for r in reports.values()))
        print()
        print("routes agree" if comparison.agree else "ROUTES DISAGREE")
    else:
        print(
            dump_json(
                {
                    "reports": {k: r.for_json() for k, r in reports.items()},
                    "comparison": comparison.for_json(),
                }
            )
        )
    return comparison.agree


def cmd_betti(args: argparse.Namespace) -> bool:
    B = betti_table(read_ideal(args), characteristic=args.field)
    print(B.render() if args.table else dump_json(B.for_json()))
    return True


def cmd_verify(args: argparse.Namespace) -> bool:
    comparison = compare_routes(read_ideal(args), oracle=args.oracle)
    print(dump_json(comparison.for_json()))
    return comparison.agree


def cmd_fuzz(args: argparse.Namespace) -> bool:
    cfg = load_config(args)
    stats = FuzzStats()
    samples = [ideal_to_json(I) for I in fuzz_borel(cfg, stats)]
    print(
        dump_json(
            {"config": cfg.for_json(), "samples": samples, "stats": stats.for_json()}
        )
    )
    return not stats.suspected


def cmd_properties(args: argparse.Namespace) -> bool:
    rep = run_properties(load_config(args))
    print(dump_json(rep.for_json()))
    return rep.ok


if __name__ == "__main__":
    main()  # pragma: no cover
