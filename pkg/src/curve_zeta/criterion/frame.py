"""Local coordinates of a compact facet and its two neighbouring lattice points."""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from ..geometry import FacetKind, NewtonPolygon, Point

logger = logging.getLogger(__name__)


class FrameError(ValueError):
    """Raised for an invalid facet frame or a degenerate closed-form denominator."""
    pass


def _turns_left(o: Point, p: Point, q: Point) -> bool:
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0]) > 0


@dataclass(frozen=True)
class ProofFacetFrame:
    """A compact facet from (k, l) to (m, n) with k < m and l > n.

    ``(a, b)`` is the lattice point before ``(k, l)`` on the staircase and
    ``(c, d)`` the one after ``(m, n)``; next to a ray these are the next
    lattice point along the ray.
    """

    k: int
    l: int  # noqa: E741
    m: int
    n: int
    g: int
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        values = (self.k, self.l, self.m, self.n, self.a, self.b, self.c, self.d)
        if min(values) < 0:
            raise FrameError(f"Frame {self} has a negative coordinate")
        if not (self.k < self.m and self.l > self.n):
            raise FrameError(f"Facet ({self.k}, {self.l})-({self.m}, {self.n}) is not a staircase step")
        if self.g != math.gcd(self.m - self.k, self.l - self.n):
            raise FrameError(f"g = {self.g} is not the lattice length of the facet")
        if not (self.a <= self.k and self.b > self.l and self.c > self.m and self.d <= self.n):
            raise FrameError(f"Neighbour points of {self} are on the wrong side")
        if not _turns_left(self.left, self.start, self.end):
            raise FrameError(f"Left neighbour {self.left} breaks convexity")
        if not _turns_left(self.start, self.end, self.right):
            raise FrameError(f"Right neighbour {self.right} breaks convexity")

    @property
    def start(self) -> Point:
        return self.k, self.l

    @property
    def end(self) -> Point:
        return self.m, self.n

    @property
    def left(self) -> Point:
        return self.a, self.b

    @property
    def right(self) -> Point:
        return self.c, self.d

    @property
    def A(self) -> int:
        """lm - kn, the slope of the facet factor (lm - kn)s + (l - n + m - k)."""
        return self.l * self.m - self.k * self.n

    @property
    def B(self) -> int:
        return self.l - self.n + self.m - self.k

    @property
    def candidate(self) -> Fraction:
        return Fraction(-self.B, self.A)

    def mirrored(self) -> "ProofFacetFrame":
        """The same configuration with x and y exchanged."""
        return ProofFacetFrame(
            k=self.n, l=self.m, m=self.l, n=self.k, g=self.g,
            a=self.d, b=self.c, c=self.b, d=self.a,
        )


def frame_for_facet(polygon: NewtonPolygon, index: int) -> ProofFacetFrame:
    """Frame of compact facet ``index``, with ray points for the outer neighbours.

    Raises:
        FrameError: If the facet is a ray
    """
    facet = polygon.facets[index]
    if facet.kind is not FacetKind.COMPACT:
        raise FrameError(f"{facet.describe()} has no proof frame")
    (k, l), (m, n) = facet.start, facet.end
    vertex = polygon.vertex_index(facet.start)
    a, b = polygon.vertices[vertex - 1] if vertex > 0 else (k, l + 1)
    after = vertex + 2
    c, d = polygon.vertices[after] if after < len(polygon.vertices) else (m + 1, n)
    frame = ProofFacetFrame(k=k, l=l, m=m, n=n, g=facet.g, a=a, b=b, c=c, d=d)
    logger.debug(f"Frame for {facet.describe()}: {frame}")
    return frame
