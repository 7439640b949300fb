"""The B1-facet pole criterion checked against directly computed poles."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Set, Tuple

from ..geometry import NewtonPolygon, SupportPoint, build_polygon, is_B1
from ..zeta import MINUS_ONE, ZetaResult, actual_poles, candidate_poles, topological_zeta
from .formulas import facet_residue
from .nondegeneracy import NondegeneracyReport, nondegeneracy_check

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CriterionEntry:
    """Prediction and outcome for one candidate value other than -1."""

    value: Fraction
    facets: Tuple[int, ...]
    predicted_pole: bool
    actual_pole: bool
    order: int = 0

    @property
    def adjacent_pair(self) -> bool:
        return len(self.facets) == 2 and abs(self.facets[0] - self.facets[1]) == 1

    @property
    def agree(self) -> bool:
        if self.predicted_pole != self.actual_pole:
            return False
        return self.order == 2 if self.adjacent_pair else True

    def describe(self) -> str:
        predicted = "pole" if self.predicted_pole else "no pole"
        actual = f"pole of order {self.order}" if self.actual_pole else "cancelled"
        status = "agree" if self.agree else "DISAGREE"
        return f"{self.value}: predicted {predicted}, found {actual} ({status})"


@dataclass(frozen=True)
class ResidueCheck:
    """Residue from the canonical zeta function against the facet formulas."""

    value: Fraction
    computed: Fraction
    expected: Fraction

    @property
    def matches(self) -> bool:
        return self.computed == self.expected


@dataclass(frozen=True)
class CriterionVerdict:
    hypotheses_met: bool
    entries: Tuple[CriterionEntry, ...]
    residue_checks: Tuple[ResidueCheck, ...]
    low_candidates: Tuple[Fraction, ...]
    nondegeneracy: Optional[NondegeneracyReport] = None

    @property
    def agree(self) -> bool:
        return all(entry.agree for entry in self.entries)

    @property
    def residues_match(self) -> bool:
        return all(check.matches for check in self.residue_checks)

    @property
    def predicted(self) -> Set[Fraction]:
        return {e.value for e in self.entries if e.predicted_pole}

    @property
    def actual(self) -> Set[Fraction]:
        return {e.value for e in self.entries if e.actual_pole}

    def details(self) -> List[str]:
        lines = [entry.describe() for entry in self.entries]
        for check in self.residue_checks:
            mark = "ok" if check.matches else "MISMATCH"
            lines.append(
                f"residue at {check.value}: {check.computed} vs closed form {check.expected} ({mark})"
            )
        if not self.hypotheses_met:
            lines.append("formal value: nondegeneracy failed")
        return lines


def predicted_poles(polygon: NewtonPolygon) -> Set[Fraction]:
    """Candidates other than -1 contributed by at least one facet that is not B1."""
    predicted: Set[Fraction] = set()
    for candidate in candidate_poles(polygon):
        if candidate.value == MINUS_ONE:
            continue
        if any(not is_B1(polygon.facets[i]).is_b1 for i in candidate.facets):
            predicted.add(candidate.value)
    return predicted


def verify_criterion(
    support: Iterable[SupportPoint],
    polygon: Optional[NewtonPolygon] = None,
    zeta: Optional[ZetaResult] = None,
) -> CriterionVerdict:
    """Compare predicted and actual poles and cross-check simple-pole residues.

    Args:
        support: Terms of f
        polygon: Newton polygon of f, built from ``support`` when omitted
        zeta: Assembled zeta function, computed when omitted

    Returns:
        The verdict; ``hypotheses_met`` is False for degenerate f
    """
    support = tuple(support)
    if polygon is None:
        polygon = build_polygon(support)
    nondegeneracy = nondegeneracy_check(support, polygon)
    if not nondegeneracy.nondegenerate:
        logger.warning("Nondegeneracy failed; the criterion is evaluated on a formal value")
    if zeta is None:
        zeta = topological_zeta(polygon)

    reports = {r.value: r for r in actual_poles(zeta, polygon)}
    predicted = predicted_poles(polygon)
    candidates = candidate_poles(polygon)

    entries = tuple(
        CriterionEntry(
            value=c.value,
            facets=c.facets,
            predicted_pole=c.value in predicted,
            actual_pole=c.value in reports,
            order=reports[c.value].order if c.value in reports else 0,
        )
        for c in candidates if c.value != MINUS_ONE
    )

    checks: List[ResidueCheck] = []
    for report in reports.values():
        if report.is_minus_one or report.residue is None:
            continue
        expected = sum((facet_residue(polygon, i) for i in report.contributing_facets), Fraction(0))
        checks.append(ResidueCheck(value=report.value, computed=report.residue, expected=expected))

    low = tuple(c.value for c in candidates if c.value < MINUS_ONE)
    if low:
        logger.warning(f"Candidate values below -1: {', '.join(str(v) for v in low)}")

    verdict = CriterionVerdict(
        hypotheses_met=nondegeneracy.nondegenerate,
        entries=entries,
        residue_checks=tuple(checks),
        low_candidates=low,
        nondegeneracy=nondegeneracy,
    )
    if not verdict.agree:
        logger.error(f"Criterion disagreement: {'; '.join(verdict.details())}")
    elif not verdict.residues_match:
        logger.error(f"Residue mismatch: {'; '.join(verdict.details())}")
    return verdict
