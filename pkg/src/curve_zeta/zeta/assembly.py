"""Topological zeta function of a nondegenerate plane curve from its Newton polygon.

In two variables the compact faces of positive dimension are the segments of
the polygon, each with sign (-1)^1 * 1! = -1, so the Denef-Loeser sum reads

    Z(s) = sum over vertices of J_v(s) - s/(s+1) * sum over segments of g * J_t(s)

where g is the lattice length (normalized volume) of the segment.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from ..exactnum import FactoredRatFunc, UniPoly, rf_evaluate, rf_mul, rf_scale, rf_sum
from ..geometry import (
    Cone2,
    FacetData,
    NewtonPolygon,
    Point,
    endpoint_cone_mult,
    facet_dual_cone,
    vertex_dual_cone,
)

logger = logging.getLogger(__name__)

Face = Union[Point, FacetData]

# s/(s+1) as numerator s over the factor (1*s + 1)
S_OVER_S_PLUS_ONE = FactoredRatFunc(UniPoly.monomial(1), ((1, 1),))


@dataclass(frozen=True)
class ZetaResult:
    """The assembled zeta function with the individual terms it was summed from.

    ``facet_terms`` hold the full signed contributions
    ``-s/(s+1) * g * J_t(s)``, so ``zeta`` is the sum of all terms.
    """

    zeta: FactoredRatFunc
    vertex_terms: Tuple[Tuple[Point, FactoredRatFunc], ...]
    facet_terms: Tuple[Tuple[FacetData, FactoredRatFunc], ...]

    def evaluate_terms(self, point: Fraction) -> Fraction:
        """Term-by-term value at ``point``, without the canonical reduction."""
        terms = [t for _, t in self.vertex_terms] + [t for _, t in self.facet_terms]
        return sum((rf_evaluate(t, point) for t in terms), Fraction(0))


def j_delta(cone: Cone2, polygon: NewtonPolygon) -> FactoredRatFunc:
    """mult(cone) over the product of (N(a) s + nu(a)) across the generators."""
    factors = tuple((polygon.weight(a), a[0] + a[1]) for a in cone.generators)
    return FactoredRatFunc(UniPoly.constant(cone.mult), factors)


def j_tau(face: Face, polygon: NewtonPolygon) -> FactoredRatFunc:
    """J of a vertex (its dual cone) or of a facet (its dual ray).

    Dual cones in the plane are already simplicial, so the decomposition has a
    single piece.
    """
    if isinstance(face, FacetData):
        return j_delta(facet_dual_cone(face), polygon)
    return j_delta(vertex_dual_cone(polygon, polygon.vertex_index(face)), polygon)


def normalized_volume(facet: FacetData) -> int:
    """Lattice length g of a compact facet; equals |kn - lm| / N."""
    if not facet.is_compact:
        raise ValueError(f"{facet.describe()} is not compact")
    (k, l), (m, n) = facet.start, facet.end
    g = math.gcd(m - k, l - n)
    if endpoint_cone_mult(facet) != facet.N * g:
        raise RuntimeError(
            f"Endpoint cone multiplicity of {facet.describe()} is not N*g = {facet.N * g}"
        )
    return g


def topological_zeta(polygon: NewtonPolygon) -> ZetaResult:
    """Assemble Z_top(s) from the polygon alone; coefficients play no role."""
    vertex_terms = tuple((v, j_tau(v, polygon)) for v in polygon.vertices)
    facet_terms = tuple(
        (facet, rf_scale(rf_mul(S_OVER_S_PLUS_ONE, j_tau(facet, polygon)),
                         -normalized_volume(facet)))
        for facet in polygon.facets if facet.is_compact
    )
    for vertex, term in vertex_terms:
        logger.debug(f"J at vertex {vertex}: {term}")
    for facet, term in facet_terms:
        logger.debug(f"Contribution of {facet.describe()}: {term}")

    zeta = rf_sum([t for _, t in vertex_terms] + [t for _, t in facet_terms])
    logger.debug(f"Z_top(s) = {zeta}")
    return ZetaResult(zeta=zeta, vertex_terms=vertex_terms, facet_terms=facet_terms)
