"""Newton polygon, facets, dual cones and the B1 classification."""

from .cones import Cone2, cone, determinant, endpoint_cone_mult, facet_dual_cone, vertex_dual_cone
from .polygon import (
    B1Flag,
    DiagonalPosition,
    FacetData,
    FacetKind,
    NewtonPolygon,
    PolygonError,
    build_polygon,
    candidate_pole,
    diagonal_point,
    diagonal_position,
    facet_data,
    is_B1,
    shared_vertex,
    staircase_vertices,
)
from .support import Point, SupportPoint, support_from_exponents, support_from_mapping

__all__ = [
    "Cone2",
    "cone",
    "determinant",
    "endpoint_cone_mult",
    "facet_dual_cone",
    "vertex_dual_cone",
    "B1Flag",
    "DiagonalPosition",
    "FacetData",
    "FacetKind",
    "NewtonPolygon",
    "PolygonError",
    "build_polygon",
    "candidate_pole",
    "diagonal_point",
    "diagonal_position",
    "facet_data",
    "is_B1",
    "shared_vertex",
    "staircase_vertices",
    "Point",
    "SupportPoint",
    "support_from_exponents",
    "support_from_mapping",
]
