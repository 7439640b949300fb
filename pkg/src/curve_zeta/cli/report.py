"""Full pipeline for one polynomial and its text and JSON reports."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from pydantic import BaseModel

from ..criterion import CriterionVerdict, facet_residue, verify_criterion
from ..exactnum import FactoredRatFunc
from ..geometry import (
    FacetData,
    FacetKind,
    NewtonPolygon,
    SupportPoint,
    build_polygon,
    candidate_pole,
    diagonal_point,
    diagonal_position,
    is_B1,
)
from ..zeta import MINUS_ONE, PoleReport, actual_poles, candidate_poles, topological_zeta
from .parser import parse_polynomial, render_polynomial

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARSE_ERROR = 1
EXIT_DEGENERATE = 2
EXIT_MISMATCH = 3


def rational_text(value: Fraction) -> str:
    """Rational as "p/q" or "p", the JSON form of every rational."""
    return str(value)


class RayModel(BaseModel):
    direction: str
    vertex: Tuple[int, int]


class FacetModel(BaseModel):
    endpoints: Optional[List[Tuple[int, int]]] = None
    ray: Optional[RayModel] = None
    normal: Tuple[int, int]
    N: int
    nu: int
    g: Optional[int] = None
    b1: str
    candidate: Optional[str] = None
    diagonal: str

    @classmethod
    def from_facet(cls, facet: FacetData) -> "FacetModel":
        candidate = candidate_pole(facet)
        if facet.is_compact:
            placement = {"endpoints": [facet.start, facet.end]}
        else:
            direction = "vertical" if facet.kind is FacetKind.VERTICAL_RAY else "horizontal"
            placement = {"ray": RayModel(direction=direction, vertex=facet.start)}
        return cls(
            **placement,
            normal=facet.normal,
            N=facet.N,
            nu=facet.nu,
            g=facet.g,
            b1=is_B1(facet).value,
            candidate=rational_text(candidate) if candidate is not None else None,
            diagonal=diagonal_position(facet).value,
        )


class ZetaModel(BaseModel):
    display: str
    numerator_coeffs: List[str]
    denominator_factors: List[Tuple[int, int]]

    @classmethod
    def from_ratfunc(cls, zeta: FactoredRatFunc) -> "ZetaModel":
        coefficients, factors = zeta.to_structured()
        return cls(
            display=zeta.render(),
            numerator_coeffs=[rational_text(c) for c in coefficients],
            denominator_factors=factors,
        )

    def to_ratfunc(self) -> FactoredRatFunc:
        """Rebuild the canonical zeta function from the structured fields."""
        return FactoredRatFunc.from_structured(
            [Fraction(c) for c in self.numerator_coeffs], self.denominator_factors
        )


class CandidateModel(BaseModel):
    value: str
    facets: List[int]
    status: str


class PoleModel(BaseModel):
    value: str
    order: int
    residue: Optional[str] = None
    closed_form_residue: Optional[str] = None
    predicted: Optional[bool] = None
    contributing_facets: List[int]


class CriterionModel(BaseModel):
    agree: bool
    hypotheses_met: bool
    residues_match: bool
    low_candidates: List[str]
    details: List[str]


class Report(BaseModel):
    input: str
    nondegenerate: bool
    degenerate_faces: List[str]
    vertices: List[Tuple[int, int]]
    facets: List[FacetModel]
    zeta: ZetaModel
    candidates: List[CandidateModel]
    poles: List[PoleModel]
    criterion: CriterionModel
    ascii_polygon: Optional[str] = None


@dataclass
class ReportOptions:
    """Output switches of ``zeta report``."""

    json: bool = False
    residues: bool = False
    ascii_polygon: bool = False


def _candidate_status(polygon: NewtonPolygon, value: Fraction, facets: Tuple[int, ...],
                      poles: List[PoleReport]) -> str:
    if any(p.value == value for p in poles):
        return "pole"
    if value == MINUS_ONE:
        return "not a pole"
    if facets and all(is_B1(polygon.facets[i]).is_b1 for i in facets):
        return "cancelled (B1)"
    return "cancelled"


def _pole_model(polygon: NewtonPolygon, pole: PoleReport, verdict: CriterionVerdict) -> PoleModel:
    closed_form = None
    if pole.residue is not None and not pole.is_minus_one:
        closed_form = sum((facet_residue(polygon, i) for i in pole.contributing_facets), Fraction(0))
    return PoleModel(
        value=rational_text(pole.value),
        order=pole.order,
        residue=rational_text(pole.residue) if pole.residue is not None else None,
        closed_form_residue=rational_text(closed_form) if closed_form is not None else None,
        predicted=None if pole.is_minus_one else pole.value in verdict.predicted,
        contributing_facets=list(pole.contributing_facets),
    )


def build_report(
    support: Iterable[SupportPoint], options: Optional[ReportOptions] = None
) -> Tuple[Report, int]:
    """Run the pipeline on a parsed support and pick the exit code."""
    options = options or ReportOptions()
    polygon = build_polygon(support)
    logger.info(f"Newton polygon with {len(polygon.vertices)} vertices")
    zeta = topological_zeta(polygon)
    logger.info(f"Z_top(s) = {zeta.zeta}")
    poles = actual_poles(zeta, polygon)
    verdict = verify_criterion(polygon.support, polygon=polygon, zeta=zeta)
    nondegeneracy = verdict.nondegeneracy

    report = Report(
        input=render_polynomial(polygon.support),
        nondegenerate=verdict.hypotheses_met,
        degenerate_faces=[s.describe() for s in nondegeneracy.degenerate_faces] if nondegeneracy else [],
        vertices=list(polygon.vertices),
        facets=[FacetModel.from_facet(f) for f in polygon.facets],
        zeta=ZetaModel.from_ratfunc(zeta.zeta),
        candidates=[
            CandidateModel(
                value=rational_text(c.value),
                facets=list(c.facets),
                status=_candidate_status(polygon, c.value, c.facets, poles),
            )
            for c in candidate_poles(polygon)
        ],
        poles=[_pole_model(polygon, p, verdict) for p in poles],
        criterion=CriterionModel(
            agree=verdict.agree,
            hypotheses_met=verdict.hypotheses_met,
            residues_match=verdict.residues_match,
            low_candidates=[rational_text(v) for v in verdict.low_candidates],
            details=verdict.details(),
        ),
        ascii_polygon=render_ascii_polygon(polygon) if options.ascii_polygon else None,
    )

    if not verdict.hypotheses_met:
        code = EXIT_DEGENERATE
    elif not (verdict.agree and verdict.residues_match):
        code = EXIT_MISMATCH
    else:
        code = EXIT_OK
    return report, code


def run_report(text: str, options: Optional[ReportOptions] = None) -> Tuple[Report, int]:
    """Parse ``text`` and run the full pipeline.

    Raises:
        ParseError: If ``text`` is not a valid polynomial
    """
    return build_report(parse_polynomial(text), options)


def render_ascii_polygon(polygon: NewtonPolygon) -> str:
    """Draw the staircase on a character grid, origin at the bottom left.

    '#' vertices, '*' other lattice points of compact facets, '+' remaining
    support points, '|' and '-' the two rays, '.' the diagonal and 'r' the
    diagonal point of a facet when it is a lattice point.
    """
    width = max(p.x for p in polygon.support) + 3
    height = max(p.y for p in polygon.support) + 3
    grid = [[" "] * width for _ in range(height)]

    def put(x: int, y: int, mark: str) -> None:
        if 0 <= x < width and 0 <= y < height:
            grid[y][x] = mark

    for i in range(min(width, height)):
        put(i, i, ".")
    first, last = polygon.vertices[0], polygon.vertices[-1]
    for y in range(first[1] + 1, height):
        put(first[0], y, "|")
    for x in range(last[0] + 1, width):
        put(x, last[1], "-")
    for p in polygon.support:
        put(p.x, p.y, "+")
    for facet in polygon.facets:
        if facet.is_compact:
            for x, y in polygon.lattice_points(facet):
                put(x, y, "*")
    for facet in polygon.facets:
        r = diagonal_point(facet)
        if r is not None and r.denominator == 1:
            put(int(r), int(r), "r")
    for x, y in polygon.vertices:
        put(x, y, "#")

    rows = [f"{y:>3} {''.join(grid[y]).rstrip()}" for y in range(height - 1, -1, -1)]
    return "\n".join(rows)


def format_text(report: Report, options: Optional[ReportOptions] = None) -> str:
    """Human-readable report."""
    options = options or ReportOptions()
    lines = [f"f = {report.input}"]
    if report.nondegenerate:
        lines.append("nondegenerate: yes")
    else:
        lines.append(f"nondegenerate: no ({', '.join(report.degenerate_faces)})")
        lines.append("formal value: nondegeneracy failed")
    lines.append("vertices: " + ", ".join(f"({x}, {y})" for x, y in report.vertices))
    lines.append("facets:")
    for i, facet in enumerate(report.facets):
        if facet.endpoints is not None:
            (k, l), (m, n) = facet.endpoints
            where = f"segment ({k}, {l})-({m}, {n})"
        else:
            where = f"{facet.ray.direction} ray at {tuple(facet.ray.vertex)}"
        extra = f", g={facet.g}, {facet.b1}" if facet.g is not None else ""
        candidate = f", candidate {facet.candidate}" if facet.candidate else ""
        lines.append(f"  [{i}] {where}: normal {tuple(facet.normal)}, N={facet.N}, "
                     f"nu={facet.nu}{extra}{candidate}")
    if report.ascii_polygon:
        lines.append(report.ascii_polygon)
    lines.append(f"Z_top(s) = {report.zeta.display}")
    lines.append("candidate poles:")
    for candidate in report.candidates:
        facets = f" (facets {', '.join(map(str, candidate.facets))})" if candidate.facets else ""
        lines.append(f"  {candidate.value}: {candidate.status}{facets}")
    lines.append("poles:")
    for pole in report.poles:
        line = f"  {pole.value}: order {pole.order}"
        if options.residues and pole.residue is not None:
            line += f", residue {pole.residue}"
            if pole.closed_form_residue is not None:
                line += f" (closed form {pole.closed_form_residue})"
        lines.append(line)
    lines.append(format_verdict(report))
    return "\n".join(lines)


def format_verdict(report: Report) -> str:
    """Criterion headline followed by one indented line per detail."""
    criterion = report.criterion
    head = "criterion: agree" if criterion.agree else "criterion: DISAGREE"
    if not criterion.residues_match:
        head += " (residue mismatch)"
    return "\n".join([head] + [f"  {line}" for line in criterion.details])
