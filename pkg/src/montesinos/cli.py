"""Command-line interface: ``montesinos {cf,cr,bounds,paths,check,sweep}``.

Every subcommand prints one JSON object per line; ``sweep --format csv``
prints CSV instead.  Exit status is 0 on success, 1 for usage or
validation errors and 2 when a theorem check fails.
"""
from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from typing import Sequence

from .crossing import crossing_number, tangle_crossings
from .diagram import Direction, enumerate_basic_edgepaths, monotone_basic_edgepath
from .harness import SweepSummary, check_theorem, sweep
from .model import InvalidTuple, validate_knot
from .rationals import continued_fraction, format_fraction, parse_fraction
from .systems import twist_bounds

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATION = 2

CSV_FIELDS = ("tuple", "crossing", "bound", "alternating", "holds", "equality")

_NEGATIVE_ARG = re.compile(r"^-\d")


def _emit(obj: dict, out) -> None:
    out.write(json.dumps(obj) + "\n")


def _fraction_arg(text: str):
    try:
        return parse_fraction(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _cmd_cf(args, out) -> int:
    r = args.fraction
    cf = continued_fraction(r)
    _emit({"fraction": format_fraction(r), "cf": str(cf), "crossings": tangle_crossings(r)}, out)
    return EXIT_OK


def _cmd_cr(args, out) -> int:
    t = validate_knot(args.tuple)
    _emit({"tuple": str(t), **crossing_number(t).to_dict()}, out)
    return EXIT_OK


def _cmd_bounds(args, out) -> int:
    _emit(twist_bounds(validate_knot(args.tuple)).to_dict(), out)
    return EXIT_OK


def _path_record(p) -> dict:
    return {
        "path": str(p),
        "length": format_fraction(p.length),
        "twist": format_fraction(p.twist),
        "type": p.path_type.value,
    }


def _cmd_paths(args, out) -> int:
    r = args.fraction
    if r.denominator == 1:
        raise ValueError(f"{format_fraction(r)} is integral")
    if args.monotone:
        paths = [monotone_basic_edgepath(r, Direction.parse(args.monotone))]
    else:
        paths = enumerate_basic_edgepaths(r)
    for p in paths:
        _emit(_path_record(p), out)
    return EXIT_OK


def _cmd_check(args, out) -> int:
    rec = check_theorem(args.tuple)
    _emit(rec.to_dict(), out)
    return EXIT_VIOLATION if rec.violation else EXIT_OK


def _cmd_sweep(args, out) -> int:
    summary = SweepSummary()
    writer = None
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
    for rec in sweep(args.max_den, args.tangles, args.max_int):
        summary.add(rec)
        d = rec.to_dict()
        if writer is None:
            _emit(d, out)
        else:
            writer.writerow(
                [str(d[k]).lower() if isinstance(d[k], bool) else d[k] for k in CSV_FIELDS]
            )
    if writer is None:
        _emit(summary.to_dict(), out)
    else:
        sys.stderr.write(json.dumps(summary.to_dict()) + "\n")
    return EXIT_VIOLATION if summary.violations else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="montesinos",
        description="Crossing numbers and twist bounds for Montesinos knots.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cf", help="continued fraction and tangle crossings of p/q")
    p.add_argument("fraction", type=_fraction_arg)
    p.set_defaults(func=_cmd_cf)

    p = sub.add_parser("cr", help="crossing number of a tuple")
    p.add_argument("tuple", help='comma-separated tangles, e.g. "1/2,1/3,-2/3"')
    p.set_defaults(func=_cmd_cr)

    p = sub.add_parser("bounds", help="extremal twists of the monotone edgepath systems")
    p.add_argument("tuple")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("paths", help="basic edgepaths of a single tangle")
    p.add_argument("fraction", type=_fraction_arg)
    p.add_argument("--monotone", choices=("inc", "dec"))
    p.set_defaults(func=_cmd_paths)

    p = sub.add_parser("check", help="check 2 cr(K) >= tau_max - tau_min")
    p.add_argument("tuple")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("sweep", help="check every valid tuple in a family")
    p.add_argument("--max-den", type=int, required=True)
    p.add_argument("--tangles", type=int, required=True)
    p.add_argument("--max-int", type=int, default=0)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_sweep)
    return parser


def _protect_negative(argv: list[str]) -> list[str]:
    # "-2/3" is not a negative number to argparse; mark it positional.
    out = list(argv)
    for i, a in enumerate(out):
        if _NEGATIVE_ARG.match(a) and "--" not in out[:i]:
            out.insert(i, "--")
            break
    return out


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_negative(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        if args.command == "sweep" and (args.max_den < 2 or args.tangles < 3 or args.max_int < 0):
            raise ValueError("sweep needs --max-den >= 2, --tangles >= 3, --max-int >= 0")
        return args.func(args, out)
    except InvalidTuple as exc:
        sys.stderr.write(json.dumps({"error": exc.code, "message": str(exc)}) + "\n")
        return EXIT_ERROR
    except (ValueError, ZeroDivisionError) as exc:
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
