"""Dual cones of the Newton polygon and their multiplicities."""

import math
from dataclasses import dataclass
from typing import Tuple

from .polygon import FacetData, NewtonPolygon
from .support import Point


def determinant(u: Point, v: Point) -> int:
    """Signed area u x v of the parallelogram on u and v."""
    return u[0] * v[1] - u[1] * v[0]


@dataclass(frozen=True)
class Cone2:
    """Simplicial cone in the closed first quadrant spanned by primitive vectors.

    A cone with one generator is the dual ray of a facet and has
    multiplicity 1; with two generators the multiplicity is the absolute
    determinant.
    """

    generators: Tuple[Point, ...]
    mult: int

    def __post_init__(self) -> None:
        if len(self.generators) not in (1, 2):
            raise ValueError("A cone in the plane has one or two generators")
        for a1, a2 in self.generators:
            if a1 < 0 or a2 < 0 or math.gcd(a1, a2) != 1:
                raise ValueError(f"Generator ({a1}, {a2}) is not primitive in the first quadrant")
        expected = 1 if len(self.generators) == 1 else abs(determinant(*self.generators))
        if self.mult != expected or self.mult <= 0:
            raise ValueError(f"Cone {self.generators} has multiplicity {expected}, not {self.mult}")


def cone(*generators: Point) -> Cone2:
    """Cone with its multiplicity filled in from the generators."""
    mult = 1 if len(generators) == 1 else abs(determinant(*generators))
    return Cone2(generators=tuple(generators), mult=mult)


def vertex_dual_cone(polygon: NewtonPolygon, index: int) -> Cone2:
    """Cone spanned by the normals of the two facets meeting at a vertex."""
    left, right = polygon.facets_at_vertex(index)
    return cone(polygon.facets[left].normal, polygon.facets[right].normal)


def facet_dual_cone(facet: FacetData) -> Cone2:
    """The dual ray of a facet, spanned by its normal."""
    return cone(facet.normal)


def endpoint_cone_mult(facet: FacetData) -> int:
    """|kn - lm| for a compact facet with endpoints (k, l) and (m, n)."""
    if not facet.is_compact:
        raise ValueError(f"{facet.describe()} is not compact")
    return abs(determinant(facet.start, facet.end))
