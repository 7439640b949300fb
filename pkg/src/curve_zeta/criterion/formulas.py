"""Closed-form contributions and residues around a single facet.

With ``A = lm - kn`` and ``B = l - n + m - k`` the facet factor is ``As + B``
and its candidate pole is ``s0 = -B/A``. Only three terms of the zeta function
contain that factor: the facet term and the terms of its two vertices. Their
residues at ``s0`` add up to ``closed_form_residue``, whatever the neighbours.
"""

import logging
from enum import Enum
from fractions import Fraction
from typing import Tuple

from ..exactnum import FactoredRatFunc, UniPoly, rf_sum
from ..geometry import FacetKind, NewtonPolygon
from .frame import FrameError, ProofFacetFrame, frame_for_facet

logger = logging.getLogger(__name__)


class Side(Enum):
    """Which endpoint of the facet a vertex contribution belongs to."""
    LEFT = "left"
    RIGHT = "right"


def facet_contribution(frame: ProofFacetFrame) -> FactoredRatFunc:
    """-s g^2 / ((s + 1)(As + B)), the facet term of the zeta function."""
    numerator = UniPoly.monomial(1, -frame.g ** 2)
    return FactoredRatFunc(numerator, ((1, 1), (frame.A, frame.B)))


def vertex_contribution(frame: ProofFacetFrame, which: Side) -> FactoredRatFunc:
    """J of the vertex (k, l) or (m, n), written through the neighbour point.

    Both linear forms carry the lattice lengths of their segments, which the
    numerator carries as well, so the value equals the dual-cone J exactly.
    """
    k, l, m, n = frame.k, frame.l, frame.m, frame.n
    if which is Side.LEFT:
        a, b = frame.a, frame.b
        numerator = (b - l) * (m - k) - (l - n) * (k - a)
        neighbour = (b * k - a * l, b - l + k - a)
    else:
        c, d = frame.c, frame.d
        numerator = (l - n) * (c - m) - (n - d) * (m - k)
        neighbour = (n * c - m * d, n - d + c - m)
    return FactoredRatFunc(UniPoly.constant(numerator), ((frame.A, frame.B), neighbour))


def three_term_sum(frame: ProofFacetFrame) -> FactoredRatFunc:
    """The facet term plus both vertex terms: every term containing ``As + B``."""
    return rf_sum([
        facet_contribution(frame),
        vertex_contribution(frame, Side.LEFT),
        vertex_contribution(frame, Side.RIGHT),
    ])


def factor_F(frame: ProofFacetFrame) -> Fraction:
    """F = (ml - nk)(ml - nk + k - m + n - l) + g^2 (n - m)(k - l)."""
    A, B = frame.A, frame.B
    return Fraction(A * (A - B) + frame.g ** 2 * (frame.n - frame.m) * (frame.k - frame.l))


def F_identity_terms(frame: ProofFacetFrame) -> Tuple[int, int, int, int, int]:
    """Five summands adding up to A(A - B) - (l - k)(n - m)(m - k)^2.

    Each summand is non-negative when the facet lies above the diagonal.
    """
    k, l, m, n = frame.k, frame.l, frame.m, frame.n
    return (
        l * m * (m - k) * (m - k - 1),
        k * (n - m) * (m - k) ** 2,
        k * n * (m - k),
        (l - n) * (l * m * (m - 1) - n * k ** 2),
        k * n * (l - n),
    )


def closed_form_residue(frame: ProofFacetFrame) -> Fraction:
    """Residue of the zeta function at the facet's candidate pole.

    Raises:
        FrameError: If a vertex lies on the diagonal or the candidate is -1
    """
    A, B = frame.A, frame.B
    denominator = A * (frame.n - frame.m) * (frame.k - frame.l) * (A - B)
    if denominator == 0:
        raise FrameError(f"Closed-form residue denominator vanishes for {frame}")
    return B * factor_F(frame) / denominator


def noncompact_residue(a: int, b: int) -> Fraction:
    """1/(a - b): residue at -1/a for the ray x = a from the vertex (a, b).

    Raises:
        FrameError: If ``a`` is not positive or ``a == b``
    """
    if a <= 0 or b < 0:
        raise FrameError(f"Ray x = {a} from ({a}, {b}) contributes no candidate pole")
    if a == b:
        raise FrameError(f"Vertex ({a}, {b}) lies on the diagonal")
    return Fraction(1, a - b)


def noncompact_vertex_term(a: int, b: int, c: int, d: int) -> FactoredRatFunc:
    """(c - a) / ((as + 1)((bc - ad)s + b - d + c - a)) for the vertex (a, b)."""
    return FactoredRatFunc(
        UniPoly.constant(c - a), ((a, 1), (b * c - a * d, b - d + c - a))
    )


def ray_frame(polygon: NewtonPolygon, index: int) -> Tuple[int, int, int, int]:
    """(a, b, c, d) for a ray, with x and y exchanged for the horizontal ray."""
    facet = polygon.facets[index]
    x0, y0 = facet.start
    if facet.kind is FacetKind.VERTICAL_RAY:
        c, d = polygon.vertices[1] if len(polygon.vertices) > 1 else (x0 + 1, y0)
        return x0, y0, c, d
    if facet.kind is FacetKind.HORIZONTAL_RAY:
        px, py = polygon.vertices[-2] if len(polygon.vertices) > 1 else (x0, y0 + 1)
        return y0, x0, py, px
    raise FrameError(f"{facet.describe()} is not a ray")


def facet_residue(polygon: NewtonPolygon, index: int) -> Fraction:
    """Residue the facet alone contributes at its candidate pole."""
    facet = polygon.facets[index]
    if facet.kind is FacetKind.COMPACT:
        return closed_form_residue(frame_for_facet(polygon, index))
    a, b, _, _ = ray_frame(polygon, index)
    return noncompact_residue(a, b)
