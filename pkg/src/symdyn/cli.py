"""Command-line front end.

Exit codes: 0 success / all pass, 1 a certificate failed, 2 input error,
3 empty result, 4 enumeration budget exceeded, 5 a condition is blocked.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import blockcode, growth, measures, sofic
from .errors import BudgetExceededError, EmptySubshiftError, SpecError
from .fileio import dump_code, load_code, load_shift
from .shifts import language_words

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_EMPTY, EXIT_BUDGET, EXIT_BLOCKED = 0, 1, 2, 3, 4, 5


class InputError(Exception):
    pass


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"{text!r} must be positive")
    return v


def _pair(text):
    try:
        l, r = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not of the form l,r") from None
    if l < 0 or r < 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be nonnegative")
    return l, r


def _int_list(text):
    try:
        values = [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated list") from None
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError(f"{text!r} must list positive integers")
    return values


def _frac(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _emit(args, text: str):
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_codes(args, spec):
    return [load_code(p, spec) for p in args.codes.split(",") if p]


# --- commands ---------------------------------------------------------------

def cmd_language(args, spec):
    ws = language_words(spec, args.n)
    _emit(args, "".join(f"{w}\n" for w in ws))
    return EXIT_OK


def cmd_growth(args, spec):
    table = growth.growth_function(spec, args.rmax)
    if args.format == "json":
        rows = [{"r": r, "N": N, "L": L, "L/r": L / r}
                for r, (N, L) in enumerate(zip(table.counts, table.logs), start=1)]
        _emit(args, json.dumps({"shift": spec.name, "rows": rows}, indent=2) + "\n")
    else:
        _emit(args, table.to_csv())
    return EXIT_OK


def cmd_entropy(args, spec):
    value, argmin = growth.entropy_estimate(spec, args.rmax)
    if args.format == "csv":
        _emit(args, _csv([["entropy", "argmin"], [repr(value), argmin]]))
    else:
        _emit(args, json.dumps({"shift": spec.name, "r_max": args.rmax, "entropy": value,
                                "argmin": argmin}, indent=2) + "\n")
    return EXIT_OK


def cmd_flat(args, spec):
    if not 0 < args.eps < 1:
        raise InputError("--eps must lie in (0, 1)")
    report = growth.find_flat_windows(spec, args.margin, args.eps, args.cap)
    if args.format == "json":
        _emit(args, json.dumps({"shift": spec.name, "margin": list(report.margin),
                                "eps_target": _frac(report.eps_target),
                                "hits": [{"n": n, "eps": _frac(e)} for n, e in report.hits],
                                "exhausted": report.exhausted}, indent=2) + "\n")
    else:
        _emit(args, report.to_csv())
    return EXIT_EMPTY if report.exhausted else EXIT_OK


def cmd_autos(args, spec):
    codes = blockcode.search_automorphisms(spec, args.radius, args.inverse_cap, args.depth,
                                           budget=args.budget)
    code_dir = Path(args.code_dir or f"autos-{spec.name}")
    code_dir.mkdir(parents=True, exist_ok=True)
    for code in codes:
        (code_dir / f"{code.name}.code").write_text(dump_code(code, spec))
    _emit(args, f"{len(codes)}\n")
    return EXIT_OK


def cmd_charmeas(args, spec):
    if args.m > args.n:
        raise InputError(f"--m {args.m} exceeds --n {args.n}")
    codes = _load_codes(args, spec)
    report = measures.characteristic_defect(spec, codes, args.n, args.m, certify_depth=args.depth)
    _emit(args, report.to_csv() if args.format == "csv" else report.to_json())
    return EXIT_OK if report.all_pass else EXIT_FAIL


def cmd_sofic(args, spec):
    codes = _load_codes(args, spec)
    report = sofic.check_sofic_conditions(spec, codes, args.n, args.margins, certify_depth=args.depth)
    if args.format == "csv":
        d = report.to_dict()
        rows = [["id", "defined_num", "defined_den", "injective_num", "injective_den",
                 "floor_num", "floor_den", "cond2", "cond3_mismatches", "cond4"]]
        for c in d["codes"]:
            rows.append([c["id"], c["defined"]["num"], c["defined"]["den"], c["injective"]["num"],
                         c["injective"]["den"], d["floor"]["num"], d["floor"]["den"],
                         "" if c["cond2"] is None else str(c["cond2"]).lower(),
                         c["cond3_mismatches"], c["cond4"] or ""])
        _emit(args, _csv(rows))
    else:
        _emit(args, report.to_json())
    if report.blocked:
        return EXIT_BLOCKED
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_freq(args, spec):
    table = measures.frequency_comparison(spec, args.schedule, args.m)
    if args.format == "json":
        _emit(args, json.dumps({"shift": spec.name, "m": args.m,
                                "rows": [{"n": n, "tv": _frac(tv)} for n, tv in table]},
                               indent=2) + "\n")
    else:
        _emit(args, _csv([["n", "tv_num", "tv_den", "tv"]]
                         + [[n, tv.numerator, tv.denominator, repr(float(tv))] for n, tv in table]))
    return EXIT_OK


def cmd_recur(args, spec):
    R = sofic.recurrence_check(spec, args.n, args.cap)
    if args.format == "csv":
        _emit(args, _csv([["n", "R"], [args.n, "" if R is None else R]]))
    else:
        _emit(args, json.dumps({"shift": spec.name, "n": args.n, "cap": args.cap, "R": R},
                               indent=2) + "\n")
    return EXIT_EMPTY if R is None else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", required=True, help="shift file")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--format", choices=["json", "csv"])

    parser = argparse.ArgumentParser(prog="symdyn", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("language", parents=[common], help="list admissible words")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_language, default_format="csv")

    p = sub.add_parser("growth", parents=[common], help="growth function table")
    p.add_argument("--rmax", type=_positive, required=True)
    p.set_defaults(func=cmd_growth, default_format="csv")

    p = sub.add_parser("entropy", parents=[common], help="entropy upper bound")
    p.add_argument("--rmax", type=_positive, required=True)
    p.set_defaults(func=cmd_entropy, default_format="json")

    p = sub.add_parser("flat", parents=[common], help="flat windows for a margin")
    p.add_argument("--margin", type=_pair, required=True)
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--cap", type=_positive, required=True)
    p.set_defaults(func=cmd_flat, default_format="csv")

    p = sub.add_parser("autos", parents=[common], help="search automorphisms of a given radius")
    p.add_argument("--radius", type=_pair, required=True)
    p.add_argument("--inverse-cap", type=int, default=3)
    p.add_argument("--depth", type=_positive, default=8)
    p.add_argument("--budget", type=_positive, default=blockcode.DEFAULT_BUDGET)
    p.add_argument("--code-dir", help="directory for the code files (default autos-<shift name>)")
    p.set_defaults(func=cmd_autos, default_format="csv")

    p = sub.add_parser("charmeas", parents=[common], help="characteristic-measure defect report")
    p.add_argument("--codes", required=True, help="comma-separated code files")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--depth", type=_positive, default=8, help="certification depth")
    p.set_defaults(func=cmd_charmeas, default_format="json")

    p = sub.add_parser("sofic", parents=[common], help="sofic-approximation conditions")
    p.add_argument("--codes", required=True, help="comma-separated code files, including the identity")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--margins", type=_pair, required=True)
    p.add_argument("--depth", type=_positive, default=8, help="certification depth")
    p.set_defaults(func=cmd_sofic, default_format="json")

    p = sub.add_parser("freq", parents=[common], help="distance to factor frequencies")
    p.add_argument("--schedule", type=_int_list, required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.set_defaults(func=cmd_freq, default_format="csv")

    p = sub.add_parser("recur", parents=[common], help="uniform recurrence length")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--cap", type=_positive, required=True)
    p.set_defaults(func=cmd_recur, default_format="json")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.format is None:
        args.format = args.default_format
    try:
        spec = load_shift(args.spec)
        return args.func(args, spec)
    except EmptySubshiftError as exc:
        print(f"symdyn: empty subshift: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    except BudgetExceededError as exc:
        print(f"symdyn: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (SpecError, InputError, ValueError) as exc:
        print(f"symdyn: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
