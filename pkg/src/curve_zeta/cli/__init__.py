"""Command-line front end, report models and the random corpus harness."""

from .corpus import (
    CorpusConfig,
    CorpusSummary,
    InstanceResult,
    check_instance,
    format_summary,
    random_staircase,
    run_corpus,
    run_corpus_async,
)
from .parser import ParseError, parse_polynomial, render_polynomial
from .report import (
    EXIT_DEGENERATE,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    Report,
    ReportOptions,
    ZetaModel,
    build_report,
    format_text,
    format_verdict,
    render_ascii_polygon,
    run_report,
)

__all__ = [
    "CorpusConfig",
    "CorpusSummary",
    "InstanceResult",
    "check_instance",
    "format_summary",
    "random_staircase",
    "run_corpus",
    "run_corpus_async",
    "ParseError",
    "parse_polynomial",
    "render_polynomial",
    "EXIT_DEGENERATE",
    "EXIT_MISMATCH",
    "EXIT_OK",
    "EXIT_PARSE_ERROR",
    "Report",
    "ReportOptions",
    "ZetaModel",
    "build_report",
    "format_text",
    "format_verdict",
    "render_ascii_polygon",
    "run_report",
]
