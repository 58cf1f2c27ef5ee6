"""Command line front end.

Subcommands mirror the library: profile, classify, embed, bounds, slope,
table1, scan, verylast, plane, selfcheck.  Results go to stdout in
markdown (default), csv, or json; diagnostics go to stderr.  Exit codes:
0 success, 1 selfcheck failure, 2 invalid input or usage, 3 a bound
contradiction.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .castelnuovo import profile
from .errors import ContradictionError, DomainError, InvalidInput
from .extremal import classify_extremal, embed_extremal
from .gonality import (
    GonalityLedger,
    baseline_ledger,
    known_family_verdict,
    plane_curve_gonality,
    plane_slope_verdict,
    slope_verdict,
    verylast_sequence,
    with_assumptions,
)
from .selfcheck import run_selfcheck
from .tables import SCAN_FIELDS, TABLE_FIELDS, scan, serialize, table1

ENTRY_FIELDS = ("r", "lo", "hi", "exact", "tags")


def _emit_scalar(record: dict, fmt: str) -> str:
    if fmt == "md":
        return " ".join(f"{k}={v}" for k, v in record.items()) + "\n"
    if fmt == "csv":
        return serialize([record], "csv")
    return json.dumps(record, indent=2) + "\n"


def _entry_record(entry) -> dict:
    return {
        "r": entry.index,
        "lo": entry.lo,
        "hi": entry.hi,
        "exact": entry.exact,
        "tags": " ".join(entry.provenance),
    }


def _ledger_records(led: GonalityLedger) -> list[dict]:
    return [_entry_record(e) for e in led.entries()]


def _cmd_profile(args) -> int:
    p = profile(args.d, args.r, strict=not args.lenient)
    record = {"m": p.m, "eps": p.eps, "pi": p.pi}
    sys.stdout.write(_emit_scalar(record, args.format))
    return 0


def _cmd_classify(args) -> int:
    records = [m.record() for m in classify_extremal(args.d, args.r)]
    sys.stdout.write(serialize(records, args.format))
    return 0


def _cmd_embed(args) -> int:
    res = embed_extremal(args.gamma, args.lam, args.n)
    record = {
        "gamma": res.gamma,
        "lambda": res.lam,
        "n": res.n,
        "beta": res.scroll.beta,
        "r": res.r,
        "d": res.d,
        "eps": res.eps,
        "genus": res.genus,
        "pi": res.profile.pi,
        "extremal": res.hypothesis_met,
        "class": res.model.class_label if res.model else "",
    }
    sys.stdout.write(_emit_scalar(record, args.format))
    return 0


def _parse_assumption(text: str) -> tuple[int, int]:
    head, sep, tail = text.partition("=")
    if not sep:
        raise InvalidInput(f"assumption {text!r} is not of the form R=V")
    try:
        return int(head), int(tail)
    except ValueError:
        raise InvalidInput(f"assumption {text!r} needs integer R and V") from None


def _cmd_bounds(args) -> int:
    led = baseline_ledger(args.gamma, args.g)
    if args.assume:
        pairs = [_parse_assumption(text) for text in args.assume]
        led = with_assumptions(led, pairs)
    sys.stdout.write(serialize(_ledger_records(led), args.format, ENTRY_FIELDS))
    return 0


def _cmd_slope(args) -> int:
    if args.family is not None:
        v = known_family_verdict(args.family)
        record = {"family": args.family, "status": str(v.status),
                  "tag": v.tag, "reason": v.reason}
        sys.stdout.write(_emit_scalar(record, args.format))
        return 0
    if args.d is None or args.r is None:
        raise InvalidInput("slope needs either d and r or --family")
    records = []
    for model in classify_extremal(args.d, args.r):
        if args.gamma is not None and model.gamma != args.gamma:
            continue
        v = slope_verdict(model)
        records.append({
            "kind": model.kind.value,
            "gamma": model.gamma,
            "d": model.d,
            "r": model.r,
            "status": str(v.status),
            "tag": v.tag,
            "reason": v.reason,
        })
    if not records:
        raise InvalidInput(
            f"no extremal model with gonality {args.gamma} at d={args.d} r={args.r}"
        )
    sys.stdout.write(serialize(records, args.format))
    return 0


def _cmd_table1(args) -> int:
    rows = table1(args.gamma_max, args.mode)
    records = [row.record() for row in rows]
    sys.stdout.write(serialize(records, args.format, TABLE_FIELDS))
    return 0


def _cmd_scan(args) -> int:
    records = scan(args.r_lo, args.r_hi, args.d_max)
    sys.stdout.write(serialize(records, args.format, SCAN_FIELDS))
    return 0


def _cmd_verylast(args) -> int:
    led, rows = verylast_sequence(args.n)
    abar = (args.n - 3) // 2
    window = range(args.n, args.n + 2 * abar + 3)
    entry_records = [_entry_record(led.entry(r)) for r in window]
    row_records = [row.record() for row in rows]
    if args.format == "json":
        payload = {
            "n": args.n,
            "gamma": led.gamma,
            "genus": led.g,
            "rows": row_records,
            "entries": entry_records,
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    elif args.format == "csv":
        sys.stdout.write(serialize(entry_records, "csv", ENTRY_FIELDS))
    else:
        sys.stdout.write(f"n={args.n} gamma={led.gamma} genus={led.g}\n\n")
        sys.stdout.write(serialize(row_records, "md"))
        sys.stdout.write("\n")
        sys.stdout.write(serialize(entry_records, "md", ENTRY_FIELDS))
    return 0


def _cmd_plane(args) -> int:
    if args.r is not None:
        d_r = plane_curve_gonality(args.k, args.r)
        v = plane_slope_verdict(args.k, args.r)
        record = {"r": args.r, "d_r": d_r, "status": str(v.status), "tag": v.tag}
        sys.stdout.write(_emit_scalar(record, args.format))
        return 0
    g = (args.k - 1) * (args.k - 2) // 2
    records = []
    for r in range(1, g + 3):
        v = plane_slope_verdict(args.k, r)
        records.append({
            "r": r,
            "d_r": plane_curve_gonality(args.k, r),
            "status": str(v.status),
            "tag": v.tag,
        })
    sys.stdout.write(serialize(records, args.format))
    return 0


def _cmd_selfcheck(args) -> int:
    count, failures = run_selfcheck()
    if failures:
        for line in failures:
            print(line, file=sys.stderr)
        print(f"{len(failures)} of {count} checks failed", file=sys.stderr)
        return 1
    sys.stdout.write(f"ok {count} checks\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extremalcurves",
        description="Numerical invariants of extremal curves and their"
        " gonality sequences.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("md", "csv", "json"), default="md",
                     help="output format (default md)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", parents=[fmt],
                       help="ratio, remainder and maximal genus for (d, r)")
    p.add_argument("d", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--lenient", action="store_true",
                   help="accept any d >= r+1 instead of d >= 2r+1")
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("classify", parents=[fmt],
                       help="candidate models for an extremal curve")
    p.add_argument("d", type=int)
    p.add_argument("r", type=int)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("embed", parents=[fmt],
                       help="re-embed a surface class as an extremal curve")
    p.add_argument("gamma", type=int)
    p.add_argument("lam", type=int, metavar="lambda")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("bounds", parents=[fmt],
                       help="gonality-sequence intervals for (gamma, g)")
    p.add_argument("gamma", type=int)
    p.add_argument("g", type=int)
    p.add_argument("--assume", action="append", metavar="R=V",
                   help="assert d_R = V before propagating (repeatable)")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("slope", parents=[fmt],
                       help="slope-inequality verdicts for extremal models")
    p.add_argument("d", type=int, nargs="?")
    p.add_argument("r", type=int, nargs="?")
    p.add_argument("--gamma", type=int, help="only models with this gonality")
    p.add_argument("--family",
                   choices=("hyperelliptic", "trigonal", "bielliptic",
                            "general_fourgonal"),
                   help="verdict for a named curve family instead")
    p.set_defaults(func=_cmd_slope)

    p = sub.add_parser("table1", parents=[fmt],
                       help="summary table of extremal families per gonality")
    p.add_argument("--gamma-max", type=int, default=6, dest="gamma_max")
    p.add_argument("--mode", choices=("paper-faithful", "resolved"),
                   default="paper-faithful")
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("scan", parents=[fmt],
                       help="flat per-model records over an (r, d) window")
    p.add_argument("r_lo", type=int)
    p.add_argument("r_hi", type=int)
    p.add_argument("--d-max", type=int, default=None, dest="d_max")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("verylast", parents=[fmt],
                       help="foursecant sweep on the surface of invariant n")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_verylast)

    p = sub.add_parser("plane", parents=[fmt],
                       help="gonality sequence of a smooth plane curve")
    p.add_argument("k", type=int)
    p.add_argument("--r", type=int, default=None,
                   help="single index instead of the whole table")
    p.set_defaults(func=_cmd_plane)

    p = sub.add_parser("selfcheck", parents=[fmt],
                       help="recompute core facts two ways and compare")
    p.set_defaults(func=_cmd_selfcheck)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ContradictionError as exc:
        print(f"contradiction: {exc}", file=sys.stderr)
        return 3
    except (InvalidInput, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
        sys.stderr.reconfigure(encoding="utf-8")
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
