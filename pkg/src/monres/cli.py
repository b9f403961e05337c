"""Command line entry point: ``monres <subcommand> ...``."""

from __future__ import annotations

import argparse
import logging
import sys
import time

from .commands import EXIT_INPUT, EXIT_NEGATIVE, EXIT_OK, SUBCOMMANDS, Options, run_subcommand
from .corpus import CHECKS, CorpusRangeError, run_sweep
from .documents import ParseError, emit_report, parse_ideal


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="monres",
        description="Integral closedness of Artinian monomial ideals via residue-current certificates.",
    )
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS:
        sp = sub.add_parser(name)
        src = sp.add_mutually_exclusive_group(required=True)
        src.add_argument("--ideal", metavar="FILE", help="ideal document ('-' for stdin)")
        src.add_argument("--inline", metavar="JSON", help="ideal document given inline")
        sp.add_argument("--complex", choices=("taylor", "scarf"), default="taylor")
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--timing", action="store_true")
    cp = sub.add_parser("corpus")
    cp.add_argument("--bound", type=int, default=4)
    cp.add_argument("--check", choices=sorted(CHECKS), default="equivalence")
    cp.add_argument("--format", choices=("json", "text"), default="json")
    cp.add_argument("--timing", action="store_true")
    return p


def _read(args) -> str:
    if args.inline is not None:
        return args.inline
    if args.ideal == "-":
        return sys.stdin.read()
    with open(args.ideal, encoding="utf-8") as fh:
        return fh.read()


def _corpus(args) -> int:
    t0 = time.perf_counter()
    try:
        res = run_sweep(args.check, args.bound)
    except CorpusRangeError as exc:
        report = {"command": "corpus", "result": {"error": type(exc).__name__, "message": str(exc)},
                  "exit_code": EXIT_INPUT}
        sys.stdout.write(emit_report(report, args.format))
        return EXIT_INPUT
    code = EXIT_OK if res.passed else EXIT_NEGATIVE
    report = {
        "command": "corpus",
        "result": {
            "check": res.check,
            "bound": res.bound,
            "count": res.count,
            "passed": res.passed,
            "failures": [d.to_dict() for d in res.failures],
        },
        "exit_code": code,
    }
    if args.timing:
        report["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
    sys.stdout.write(emit_report(report, args.format))
    return code


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if args.command == "corpus":
        return _corpus(args)
    try:
        doc = parse_ideal(_read(args))
    except (ParseError, OSError) as exc:
        report = {"command": args.command, "result": {"error": type(exc).__name__, "message": str(exc)},
                  "exit_code": EXIT_INPUT}
        sys.stdout.write(emit_report(report, args.format))
        return EXIT_INPUT
    if doc.notice:
        logging.getLogger("monres").warning(doc.notice)
    report, code = run_subcommand(args.command, doc, Options(args.complex, args.timing))
    sys.stdout.write(emit_report(report, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
