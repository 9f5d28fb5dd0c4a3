"""Command-line front end.

Exit codes: 0 all checks pass, 1 verification failure, 2 usage error,
3 I/O error.  Output files are byte-identical across runs with the same
arguments; wall time goes to stderr only.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__, clifford, colour, report, ybe
from .records import FAIL
from .scalar import parse_rat

REVERSE_SECTOR_LABELS = {v: k for k, v in report.SECTOR_LABELS.items()}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="spincas", description=__doc__)
    parser.add_argument("--version", action="version", version=f"spincas {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--r", type=int, default=2, help="rank (2..6)")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", help="output path (default: stdout or $SPINCAS_OUT)")
        p.add_argument("--jobs", type=int, default=1,
                       help="accepted for interface compatibility; execution is sequential")
        return p

    common(sub.add_parser("gamma", help="gamma-matrix integrity checks"))
    common(sub.add_parser("oracle", help="independent algebra oracles"))
    common(sub.add_parser("invariants", help="invariant recurrences and polynomial tables"))
    spectra_p = common(sub.add_parser("spectra", help="spectral suite or eigenvalue tables"))
    spectra_p.add_argument("--tables", action="store_true",
                           help="emit the eigenvalue/multiplicity CSV table only")

    colour_p = common(sub.add_parser("colour", help="ladder colour factors"))
    colour_p.add_argument("--L", type=int, default=2, help="rung count")
    colour_p.add_argument("--sector", choices=tuple(REVERSE_SECTOR_LABELS), default="pp")
    colour_p.add_argument("--closure", choices=("full", "partial", "open"), default="full")

    ybe_p = common(sub.add_parser("ybe", help="Yang-Baxter verification"))
    ybe_p.add_argument("--mode", choices=("sector", "full"), default="sector")
    ybe_p.add_argument("--form", choices=("plain", "braid"), default="braid")
    ybe_p.add_argument("--u", help="spectral parameter, e.g. 2/3")
    ybe_p.add_argument("--v", help="second spectral parameter, e.g. 5/7")
    ybe_p.add_argument("--grid", action="store_true", help="run the full deterministic grid")

    report_p = common(sub.add_parser("report", help="run suites and emit a report"))
    report_p.add_argument("--r-max", type=int, default=None,
                          help="upper rank bound (default: --r)")
    report_p.add_argument("--suites", default=",".join(report.SUITES),
                          help="comma-separated subset of " + ",".join(report.SUITES))
    return parser


def _single_suite_report(args, suites: tuple[str, ...]) -> tuple[str, int]:
    cfg = report.SuiteConfig(r_min=args.r, r_max=args.r, suites=suites, fmt=args.format)
    result = report.run_suite(cfg)
    return report.render_report(result, args.format), 0 if result["ok"] else 1


def _run_command(args) -> tuple[str, int]:
    if args.command in ("gamma", "invariants"):
        return _single_suite_report(args, (args.command,))

    if args.command == "oracle":
        records = report.oracle_suite(args.r)
        payload = {
            "engine_version": __version__,
            "r": args.r,
            "records": [rec.as_dict() for rec in records],
        }
        code = 0 if all(rec.ok for rec in records) else 1
        return json.dumps(payload, indent=2) + "\n", code

    if args.command == "spectra":
        if args.tables or args.format == "csv":
            return report.emit_tables(args.r), 0
        return _single_suite_report(args, ("spectra",))

    if args.command == "colour":
        closure = {"full": "full_trace", "partial": "partial_trace", "open": "open"}
        spec = colour.LadderSpec(
            r=args.r,
            L=args.L,
            sector=REVERSE_SECTOR_LABELS[args.sector],
            closure=closure[args.closure],
        )
        result = colour.colour_report(spec)
        return json.dumps(result, indent=2) + "\n", 0 if result["cross_check"] else 1

    if args.command == "ybe":
        return _run_ybe(args)

    if args.command == "report":
        r_max = args.r_max if args.r_max is not None else args.r
        suites = tuple(s for s in args.suites.split(",") if s)
        cfg = report.SuiteConfig(r_min=args.r, r_max=r_max, suites=suites, fmt=args.format)
        result = report.run_suite(cfg)
        return report.render_report(result, args.format), 0 if result["ok"] else 1

    raise _UsageError(f"unknown command {args.command!r}")


def _run_ybe(args) -> tuple[str, int]:
    points = []
    if args.grid or (args.u is None and args.v is None):
        us, vs = ybe.admissible_grid(args.r)
        pairs = [(u, v) for u in us for v in vs]
    elif args.u is not None and args.v is not None:
        pairs = [(parse_rat(args.u), parse_rat(args.v))]
    else:
        raise _UsageError("provide both --u and --v, or use --grid")

    failures = []
    if args.mode == "sector":
        if args.form == "braid":
            for u, v in pairs:
                outcome = ybe.ybe_point(args.r, "+", u, v, "braid")
                status = "skip" if outcome is None else ("pass" if outcome else "fail")
                points.append({"u": str(u), "v": str(v), "pass": bool(outcome)})
                if status == "fail":
                    failures.append({"u": str(u), "v": str(v)})
        else:
            record = ybe.plain_ybe_spot_check(args.r, "+", pairs)
            for check, (u, v) in zip(record.checks, pairs):
                points.append({"u": str(u), "v": str(v), "pass": check.status != FAIL})
                if check.status == FAIL:
                    failures.append({"u": str(u), "v": str(v), "witness": check.witness})
    else:
        record = ybe.full_ybe_check(args.r, points=pairs)
        for check, (u, v) in zip(record.checks, pairs):
            points.append({"u": str(u), "v": str(v), "pass": check.status != FAIL})
            if check.status == FAIL:
                failures.append({"u": str(u), "v": str(v), "witness": check.witness})

    payload = {
        "engine_version": __version__,
        "mode": args.mode,
        "form": args.form,
        "r": args.r,
        "points": points,
        "failures": failures,
    }
    return json.dumps(payload, indent=2) + "\n", 0 if not failures else 1


def _write_output(text: str, args) -> None:
    out = args.out
    if out is None and os.environ.get("SPINCAS_OUT"):
        name = f"{args.command}-r{args.r}.{args.format}"
        out = os.path.join(os.environ["SPINCAS_OUT"], name)
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise RuntimeError(f"cannot write {out}: {exc}") from exc


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    start = time.monotonic()
    try:
        text, code = _run_command(args)
        _write_output(text, args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    print(f"wall time: {time.monotonic() - start:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
