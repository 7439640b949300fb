"""Command-line entry point: ``zeta report``, ``zeta verify`` and ``zeta corpus``."""

import argparse
import logging
import sys
from typing import List, Optional

from ..config import settings
from ..geometry import PolygonError
from .corpus import CorpusConfig, format_summary, run_corpus
from .parser import ParseError
from .report import (
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    ReportOptions,
    format_text,
    format_verdict,
    run_report,
)

logger = logging.getLogger(__name__)


def positive_int(text: str) -> int:
    """argparse type for integers of at least 1."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zeta",
        description="Topological zeta function of a nondegenerate plane curve germ",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Enable debug logging")
    commands = parser.add_subparsers(dest="command", required=True)

    report = commands.add_parser("report", help="Full report for one polynomial")
    report.add_argument("expression", help='Polynomial in x and y, e.g. "x^2 + y^3"')
    report.add_argument("--json", action="store_true", help="Print the report as JSON")
    report.add_argument("--residues", action="store_true", help="Show residues of simple poles")
    report.add_argument("--ascii-polygon", action="store_true", help="Draw the Newton polygon")

    verify = commands.add_parser("verify", help="Check the pole criterion for one polynomial")
    verify.add_argument("expression", help="Polynomial in x and y")

    corpus = commands.add_parser("corpus", help="Check the criterion on random staircases")
    corpus.add_argument("--seed", type=int, default=settings.corpus_seed, help="Master seed")
    corpus.add_argument("--count", type=positive_int, default=settings.corpus_count,
                        help="Number of instances")
    corpus.add_argument("--workers", type=positive_int, default=settings.corpus_workers,
                        help="Worker processes")
    corpus.add_argument("--json", action="store_true", help="Print the summary as JSON")
    return parser


def _report(args: argparse.Namespace, verdict_only: bool) -> int:
    options = ReportOptions(
        json=getattr(args, "json", False),
        residues=getattr(args, "residues", False),
        ascii_polygon=getattr(args, "ascii_polygon", False),
    )
    try:
        report, code = run_report(args.expression, options)
    except (ParseError, PolygonError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    if verdict_only:
        print(format_verdict(report))
    elif options.json:
        print(report.model_dump_json(indent=2))
    else:
        print(format_text(report, options))
    return code


def _corpus(args: argparse.Namespace) -> int:
    config = CorpusConfig.from_settings(workers=args.workers)
    summary = run_corpus(args.seed, args.count, config)
    if args.json:
        print(summary.model_dump_json(indent=2))
    else:
        print(format_summary(summary))
    return EXIT_OK if summary.ok else EXIT_MISMATCH


def main(argv: Optional[List[str]] = None) -> int:
    """Run ``zeta`` and return the exit code."""
    args = build_parser().parse_args(argv)
    level = logging.DEBUG if args.verbose or settings.debug else settings.log_level.upper()
    logging.basicConfig(level=level, format=settings.log_format)

    if args.command == "report":
        return _report(args, verdict_only=False)
    if args.command == "verify":
        return _report(args, verdict_only=True)
    return _corpus(args)


if __name__ == "__main__":
    sys.exit(main())
