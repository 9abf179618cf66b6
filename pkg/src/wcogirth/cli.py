"""Command-line front end.

Exit codes: 0 success, 2 usage or parse error, 3 resource cap or rank zero,
4 a verifier found an inconsistency.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from . import fileformat, reporting
from .cogirth import cogirth
from .errors import (
    EnumerationCapError,
    FieldError,
    ParseError,
    PreconditionError,
    ProjectiveGeometryError,
    RankZeroError,
    WcogirthError,
)
from .geometry import ag, bose_burton, pg
from .matroid import is_simple, loops, simplify
from .verify import (
    ScanSpec,
    check_auto,
    check_condition_iii_prime,
    check_main_theorem,
    check_pg_proposition,
    check_rank2,
    paper_example,
    paper_example_matroid,
    scan,
)

log = logging.getLogger("wcogirth")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_INCONSISTENT = 4


class UsageError(WcogirthError):
    """Bad arguments or an input outside the requested check."""


def _error(exc: Exception) -> None:
    print(f"wcogirth: error: {exc}", file=sys.stderr)


def _emit(doc: dict, fmt: str) -> None:
    text = reporting.dumps(doc) + "\n" if fmt == "json" else reporting.render_text(doc)
    sys.stdout.write(text)


def _load(path: str):
    try:
        if path == "-":
            return fileformat.loads(sys.stdin.read())
        return fileformat.load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def cmd_construct(args) -> int:
    try:
        if args.kind == "pg":
            S = pg(args.r, args.q)
        elif args.kind == "ag":
            S = ag(args.r, args.q)
        else:
            if args.k is None:
                raise UsageError("boseburton needs --k")
            S = bose_burton(args.r, args.k, args.q)
    except (FieldError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    M = S.as_matroid()
    desc = f"{args.kind} r={args.r} q={args.q}" + (f" k={args.k}" if args.kind == "boseburton" else "")
    text = fileformat.dumps(M, comment=desc)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
        log.info("wrote %s (%d x %d)", args.out, M.columns.nrows, M.n)
    return EXIT_OK


def cmd_cogirth(args) -> int:
    M = _load(args.input)
    g, wit = cogirth(M, workers=args.workers)
    _emit(reporting.cogirth_document(M, g, wit), args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    M = _load(args.input)
    notes = []
    lp = loops(M)
    if lp:
        raise UsageError(f"the theorem checks need a loopless matroid; loops at {sorted(lp)}")
    if M.rank == 0:
        raise RankZeroError("rank-zero matroid")
    if not is_simple(M):
        M = simplify(M)
        notes.append("parallel elements merged into their smallest label; weights summed per class")
    try:
        if args.which == "auto":
            reports = check_auto(M, oracle=args.oracle)
        elif args.which == "main":
            reports = [check_main_theorem(M, oracle=args.oracle)]
        elif args.which == "iiiprime":
            reports = [check_condition_iii_prime(M, oracle=args.oracle)]
        elif args.which == "pg":
            reports = [check_pg_proposition(M, oracle=args.oracle)]
        else:
            reports = [check_rank2(M)]
    except ProjectiveGeometryError:
        raise UsageError("the instance is a full projective geometry; use --which pg") from None
    except PreconditionError as exc:
        raise UsageError(str(exc)) from None
    doc = reporting.verify_document(reports, notes)
    _emit(doc, args.format)
    return EXIT_OK if doc["ok"] else EXIT_INCONSISTENT


def cmd_paper_example(args) -> int:
    if args.write_matroid:
        M, info = paper_example_matroid(args.phase)
        fileformat.dump(M, args.write_matroid, comment=f"worked example ({args.phase})")
    report = paper_example(args.phase, oracle=not args.no_oracle)
    doc = reporting.verify_document([report])
    _emit(doc, args.format)
    return EXIT_OK if doc["ok"] else EXIT_INCONSISTENT


def cmd_scan(args) -> int:
    spec = ScanSpec(
        q=args.q,
        r_max=args.r_max,
        r_min=args.r_min,
        mode=args.mode,
        count=args.count,
        seed=args.seed,
        weight_max=args.weight_max,
        oracles=args.oracles,
    )
    if args.count < 0 or args.weight_max < 1:
        raise UsageError("--count must be >= 0 and --weight-max >= 1")
    try:
        report = scan(spec)
    except (FieldError, ValueError) as exc:
        if isinstance(exc, RankZeroError):
            raise
        raise UsageError(str(exc)) from None
    log.info("scanned %d instances, %d violations", report.instances, report.violations)
    _emit(reporting.scan_document(report), args.format)
    return EXIT_OK if report.ok else EXIT_INCONSISTENT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wcogirth", description="Weighted cogirth of GF(q)-representable matroids.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("construct", help="write PG, AG or Bose-Burton point matrices")
    p.add_argument("kind", choices=("pg", "ag", "boseburton"))
    p.add_argument("--r", type=int, required=True, help="rank")
    p.add_argument("--q", type=int, required=True, help="field order")
    p.add_argument("--k", type=int, help="rank of the removed flat (boseburton)")
    p.add_argument("-o", "--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("cogirth", help="minimum cocircuit weight with a witness")
    p.add_argument("input", help="matroid file, or - for stdin")
    p.add_argument("--workers", type=int, default=1)
    fmt(p)
    p.set_defaults(func=cmd_cogirth)

    p = sub.add_parser("verify", help="check the cogirth bounds and equality conditions")
    p.add_argument("input", help="matroid file, or - for stdin")
    p.add_argument("--which", choices=("auto", "main", "pg", "rank2", "iiiprime"), default="auto")
    p.add_argument("--oracle", action="store_true", help="cross-check with brute-force oracles")
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("paper-example", help="rebuild the PG(3,2) - p worked example")
    p.add_argument("--phase", choices=("before", "after"), default="before")
    p.add_argument("--no-oracle", action="store_true")
    p.add_argument("--write-matroid", metavar="PATH", help="also write the instance as a matroid file")
    fmt(p)
    p.set_defaults(func=cmd_paper_example)

    p = sub.add_parser("scan", help="exhaustive or random consistency sweep")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--r-min", type=int, default=2)
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--count", type=int, default=100, help="instances per rank (random mode)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--weight-max", type=int, default=5)
    p.add_argument("--oracles", action="store_true")
    fmt(p)
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except (UsageError, ParseError) as exc:
        _error(exc)
        return EXIT_USAGE
    except (EnumerationCapError, RankZeroError) as exc:
        _error(exc)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
