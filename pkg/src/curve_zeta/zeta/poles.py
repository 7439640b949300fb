"""Candidate poles, actual poles, orders and residues."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..exactnum import rf_residue_simple
from ..geometry import NewtonPolygon, Point, candidate_pole, shared_vertex
from .assembly import ZetaResult

logger = logging.getLogger(__name__)

MINUS_ONE = Fraction(-1)


@dataclass(frozen=True)
class CandidatePole:
    """A candidate value with the facets contributing it (none for a bare -1)."""

    value: Fraction
    facets: Tuple[int, ...]


@dataclass(frozen=True)
class PoleReport:
    """An actual pole of the zeta function."""

    value: Fraction
    order: int
    residue: Optional[Fraction]
    contributing_facets: Tuple[int, ...]
    is_minus_one: bool
    expected_order: int
    adjacent_pair: Optional[Point] = None


def candidate_poles(polygon: NewtonPolygon) -> List[CandidatePole]:
    """Distinct values -nu/N over facets with N > 0, plus -1, ascending.

    Raises:
        RuntimeError: If more than two facets share a value other than -1
    """
    groups: Dict[Fraction, List[int]] = {}
    for index, facet in enumerate(polygon.facets):
        value = candidate_pole(facet)
        if value is not None:
            groups.setdefault(value, []).append(index)
    groups.setdefault(MINUS_ONE, [])

    for value, facets in groups.items():
        if value != MINUS_ONE and len(facets) > 2:
            raise RuntimeError(f"Candidate {value} contributed by {len(facets)} facets")
    return [CandidatePole(value, tuple(facets)) for value, facets in sorted(groups.items())]


def actual_poles(z: ZetaResult, polygon: NewtonPolygon) -> List[PoleReport]:
    """One report per distinct root of the canonical denominator.

    Raises:
        RuntimeError: If a pole is not a candidate or exceeds its expected order
    """
    candidates = {c.value: c.facets for c in candidate_poles(polygon)}
    reports: List[PoleReport] = []
    for value, order in z.zeta.poles():
        if value not in candidates:
            raise RuntimeError(f"Pole {value} of {z.zeta} is not a candidate pole")
        facets = candidates[value]
        expected = len(facets) + (1 if value == MINUS_ONE else 0)
        if order > expected:
            raise RuntimeError(f"Pole {value} has order {order} above the bound {expected}")
        residue = rf_residue_simple(z.zeta, value) if order == 1 else None
        adjacent = shared_vertex(polygon, *facets) if len(facets) == 2 else None
        reports.append(PoleReport(
            value=value,
            order=order,
            residue=residue,
            contributing_facets=facets,
            is_minus_one=value == MINUS_ONE,
            expected_order=expected,
            adjacent_pair=adjacent,
        ))
        logger.debug(f"Pole {value}: order {order}, residue {residue}")
    return reports
