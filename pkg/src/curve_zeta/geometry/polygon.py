"""Newton polygon of a plane curve germ at the origin.

The polygon is the lower-left staircase hull of the support. Its facets are
listed left to right: the vertical ray above the first vertex, the compact
segments between consecutive vertices, and the horizontal ray to the right of
the last vertex. Vertex ``i`` sits between facets ``i`` and ``i + 1``.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from .support import Point, SupportPoint

logger = logging.getLogger(__name__)


class PolygonError(ValueError):
    """Raised when a support set does not define a germ with f(0) = 0."""
    pass


class FacetKind(Enum):
    """Shape of a facet of the Newton polygon."""
    COMPACT = "compact"
    VERTICAL_RAY = "vertical_ray"
    HORIZONTAL_RAY = "horizontal_ray"


class B1Flag(Enum):
    """B1 classification of a facet with respect to the coordinate axes."""
    NOT_B1 = "not_B1"
    B1_X = "B1_x"
    B1_Y = "B1_y"
    B1_BOTH = "B1_both"

    @property
    def is_b1(self) -> bool:
        return self is not B1Flag.NOT_B1


class DiagonalPosition(Enum):
    """Position of a facet relative to the diagonal x = y."""
    ABOVE = "above"
    BELOW = "below"
    CROSSING = "crossing"


@dataclass(frozen=True)
class FacetData:
    """A facet with its primitive inward normal and the numbers N and nu."""

    kind: FacetKind
    start: Point
    normal: Point
    N: int
    nu: int
    end: Optional[Point] = None
    g: Optional[int] = None

    @property
    def is_compact(self) -> bool:
        return self.kind is FacetKind.COMPACT

    @property
    def endpoints(self) -> Tuple[Point, ...]:
        return (self.start, self.end) if self.end is not None else (self.start,)

    def describe(self) -> str:
        if self.kind is FacetKind.COMPACT:
            return f"segment {self.start}-{self.end}"
        direction = "vertical" if self.kind is FacetKind.VERTICAL_RAY else "horizontal"
        return f"{direction} ray at {self.start}"


@dataclass(frozen=True)
class NewtonPolygon:
    """Vertices and facets of the Newton polygon together with the support."""

    support: Tuple[SupportPoint, ...]
    vertices: Tuple[Point, ...]
    facets: Tuple[FacetData, ...]

    def weight(self, normal: Point) -> int:
        """N(a): the minimum of ``a . p`` over the support."""
        return _weight(self.support, normal)

    def coefficients(self) -> Dict[Point, Fraction]:
        return {p.exponent: p.coeff for p in self.support}

    @property
    def compact_indices(self) -> List[int]:
        return [i for i, facet in enumerate(self.facets) if facet.is_compact]

    def vertex_index(self, vertex: Point) -> int:
        """Position of ``vertex`` in ``vertices``; ValueError if it is not one."""
        try:
            return self.vertices.index(vertex)
        except ValueError:
            raise ValueError(f"{vertex} is not a vertex of the Newton polygon") from None

    def facets_at_vertex(self, index: int) -> Tuple[int, int]:
        """Indices of the two facets meeting at vertex ``index``."""
        if not 0 <= index < len(self.vertices):
            raise IndexError(f"Vertex index {index} out of range")
        return index, index + 1

    def lattice_points(self, facet: FacetData) -> List[Point]:
        """Lattice points of a compact facet from ``start`` to ``end``."""
        if not facet.is_compact:
            raise ValueError(f"{facet.describe()} is not compact")
        (k, l), (m, n) = facet.start, facet.end
        g = facet.g
        step = ((m - k) // g, (n - l) // g)
        return [(k + i * step[0], l + i * step[1]) for i in range(g + 1)]


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def staircase_vertices(exponents: Iterable[Point]) -> List[Point]:
    """Vertices of the lower-left hull: Pareto minima, then a lower monotone chain."""
    minima: List[Point] = []
    for point in sorted(exponents):
        if not minima or point[1] < minima[-1][1]:
            minima.append(point)
    hull: List[Point] = []
    for point in minima:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], point) <= 0:
            hull.pop()
        hull.append(point)
    return hull


def _weight(support: Tuple[SupportPoint, ...], normal: Point) -> int:
    return min(normal[0] * p.x + normal[1] * p.y for p in support)


def build_polygon(support: Iterable[SupportPoint]) -> NewtonPolygon:
    """Build the Newton polygon at the origin.

    Args:
        support: Terms of f with nonzero coefficients

    Returns:
        The polygon with vertices ordered by increasing x

    Raises:
        PolygonError: If the support is empty, contains (0, 0) or repeats an
            exponent
    """
    points = tuple(sorted(support))
    if not points:
        raise PolygonError("f is zero")
    seen = set()
    for p in points:
        if p.exponent == (0, 0):
            raise PolygonError("f(0) ≠ 0 required")
        if p.exponent in seen:
            raise PolygonError(f"Duplicate exponent {p.exponent} in support")
        seen.add(p.exponent)

    vertices = staircase_vertices(seen)
    facets: List[FacetData] = []

    first = vertices[0]
    facets.append(FacetData(
        kind=FacetKind.VERTICAL_RAY, start=first, normal=(1, 0),
        N=_weight(points, (1, 0)), nu=1,
    ))
    for (k, l), (m, n) in zip(vertices, vertices[1:]):
        g = math.gcd(m - k, l - n)
        normal = ((l - n) // g, (m - k) // g)
        facets.append(FacetData(
            kind=FacetKind.COMPACT, start=(k, l), end=(m, n), normal=normal,
            N=_weight(points, normal), nu=normal[0] + normal[1], g=g,
        ))
    last = vertices[-1]
    facets.append(FacetData(
        kind=FacetKind.HORIZONTAL_RAY, start=last, normal=(0, 1),
        N=_weight(points, (0, 1)), nu=1,
    ))

    logger.debug(f"Newton polygon: vertices={vertices}, {len(facets)} facets")
    return NewtonPolygon(support=points, vertices=tuple(vertices), facets=tuple(facets))


def facet_data(polygon: NewtonPolygon, index: int) -> FacetData:
    """Facet ``index`` in left-to-right order."""
    if not 0 <= index < len(polygon.facets):
        raise IndexError(f"Facet index {index} out of range")
    return polygon.facets[index]


def candidate_pole(facet: FacetData) -> Optional[Fraction]:
    """The candidate pole -nu/N, or None when N = 0."""
    if facet.N == 0:
        return None
    return Fraction(-facet.nu, facet.N)


def is_B1(facet: FacetData) -> B1Flag:
    """Classify a compact facet as a B1-facet; rays are never B1."""
    if not facet.is_compact:
        return B1Flag.NOT_B1
    (k, l), (m, n) = facet.start, facet.end
    along_x = {k, m} == {0, 1}
    along_y = {l, n} == {0, 1}
    if along_x and along_y:
        return B1Flag.B1_BOTH
    if along_x:
        return B1Flag.B1_X
    if along_y:
        return B1Flag.B1_Y
    return B1Flag.NOT_B1


def diagonal_point(facet: FacetData) -> Optional[Fraction]:
    """The r with (r, r) on the affine line of the facet, computed from its points."""
    if facet.kind is FacetKind.COMPACT:
        (k, l), (m, n) = facet.start, facet.end
        return Fraction((l - n) * k + (m - k) * l, (l - n) + (m - k))
    a, b = facet.start
    r = a if facet.kind is FacetKind.VERTICAL_RAY else b
    return Fraction(r) if r > 0 else None


def diagonal_position(facet: FacetData) -> DiagonalPosition:
    """Whether the facet lies strictly above, strictly below or across the diagonal."""
    a, b = facet.start
    if facet.kind is FacetKind.VERTICAL_RAY:
        return DiagonalPosition.ABOVE if b > a else DiagonalPosition.CROSSING
    if facet.kind is FacetKind.HORIZONTAL_RAY:
        return DiagonalPosition.BELOW if a > b else DiagonalPosition.CROSSING
    m, n = facet.end
    if b > a and n > m:
        return DiagonalPosition.ABOVE
    if b < a and n < m:
        return DiagonalPosition.BELOW
    return DiagonalPosition.CROSSING


def shared_vertex(polygon: NewtonPolygon, i: int, j: int) -> Optional[Point]:
    """Common vertex of two facets, which exists only for neighbours."""
    if abs(i - j) != 1:
        return None
    return polygon.vertices[min(i, j)]
