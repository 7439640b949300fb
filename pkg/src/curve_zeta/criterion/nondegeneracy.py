"""Newton nondegeneracy of a plane curve germ.

A vertex face polynomial is a monomial and never degenerate. On a compact
edge the face polynomial is, up to a monomial, the one-variable polynomial
``P(t) = sum c_i t^i`` read off the lattice points of the edge; it has a
singular zero in the torus exactly when ``gcd(P, P')`` has a nonzero root.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

from ..exactnum import UniPoly, poly_gcd
from ..geometry import FacetData, NewtonPolygon, Point, SupportPoint

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FaceStatus:
    """Nondegeneracy of one compact face; ``polynomial`` is set for edges."""

    face: Union[Point, FacetData]
    nondegenerate: bool
    polynomial: Optional[UniPoly] = None

    def describe(self) -> str:
        if isinstance(self.face, FacetData):
            return self.face.describe()
        return f"vertex {self.face}"


@dataclass(frozen=True)
class NondegeneracyReport:
    faces: Tuple[FaceStatus, ...]

    @property
    def nondegenerate(self) -> bool:
        return all(status.nondegenerate for status in self.faces)

    @property
    def degenerate_faces(self) -> List[FaceStatus]:
        return [status for status in self.faces if not status.nondegenerate]


def edge_polynomial(
    facet: FacetData,
    polygon: NewtonPolygon,
    reverse: bool = False,
    coefficients: Optional[Dict[Point, Fraction]] = None,
) -> UniPoly:
    """P(t) from the lattice points of a compact edge, oriented from ``start``.

    Args:
        facet: Compact facet of ``polygon``
        polygon: The Newton polygon
        reverse: Read the edge from ``end`` to ``start`` instead
        coefficients: Coefficients of f; defaults to the polygon's support

    Returns:
        Polynomial of degree g with nonzero constant and leading terms
    """
    if coefficients is None:
        coefficients = polygon.coefficients()
    points = polygon.lattice_points(facet)
    polynomial = UniPoly(tuple(coefficients.get(p, Fraction(0)) for p in points))
    return polynomial.reciprocal() if reverse else polynomial


def has_singular_torus_root(polynomial: UniPoly) -> bool:
    """True when P and P' share a root other than t = 0."""
    common = poly_gcd(polynomial, polynomial.derivative())
    return common.degree > common.valuation


def nondegeneracy_check(
    support: Iterable[SupportPoint], polygon: NewtonPolygon
) -> NondegeneracyReport:
    """One status per vertex and per compact edge of ``polygon``."""
    coefficients = {p.exponent: p.coeff for p in support}
    faces: List[FaceStatus] = [FaceStatus(face=v, nondegenerate=True) for v in polygon.vertices]
    for facet in polygon.facets:
        if not facet.is_compact:
            continue
        polynomial = edge_polynomial(facet, polygon, coefficients=coefficients)
        nondegenerate = not has_singular_torus_root(polynomial)
        if not nondegenerate:
            logger.info(f"Degenerate {facet.describe()}: P(t) = {polynomial.render('t')}")
        faces.append(FaceStatus(face=facet, nondegenerate=nondegenerate, polynomial=polynomial))
    return NondegeneracyReport(faces=tuple(faces))
