"""Tests for the Newton polygon, facet data and dual cones."""

from fractions import Fraction

import pytest

from curve_zeta.geometry import (
    B1Flag,
    Cone2,
    DiagonalPosition,
    FacetKind,
    PolygonError,
    SupportPoint,
    build_polygon,
    candidate_pole,
    cone,
    determinant,
    diagonal_point,
    diagonal_position,
    endpoint_cone_mult,
    facet_data,
    facet_dual_cone,
    is_B1,
    shared_vertex,
    staircase_vertices,
    support_from_exponents,
    support_from_mapping,
    vertex_dual_cone,
)


def polygon_of(*exponents):
    return build_polygon(support_from_exponents(exponents))


CUSP = [(2, 0), (0, 3)]
THREE_TERMS = [(5, 0), (2, 2), (0, 5)]


class TestSupport:
    def test_zero_coefficients_dropped(self):
        support = support_from_mapping({(1, 0): 2, (0, 1): 0, (0, 2): Fraction(-1, 2)})
        assert [p.exponent for p in support] == [(0, 2), (1, 0)]

    def test_invalid_points(self):
        with pytest.raises(ValueError):
            SupportPoint(-1, 2)
        with pytest.raises(ValueError):
            SupportPoint(1, 2, 0)


class TestBuildPolygon:
    def test_cusp(self):
        polygon = polygon_of(*CUSP)
        assert polygon.vertices == ((0, 3), (2, 0))
        kinds = [f.kind for f in polygon.facets]
        assert kinds == [FacetKind.VERTICAL_RAY, FacetKind.COMPACT, FacetKind.HORIZONTAL_RAY]

        vertical, segment, horizontal = polygon.facets
        assert (vertical.normal, vertical.N, vertical.nu) == ((1, 0), 0, 1)
        assert (segment.normal, segment.N, segment.nu, segment.g) == ((3, 2), 6, 5, 1)
        assert (horizontal.normal, horizontal.N, horizontal.nu) == ((0, 1), 0, 1)

    def test_points_above_staircase_are_not_vertices(self):
        polygon = polygon_of((3, 0), (1, 1), (0, 3), (2, 2), (1, 4))
        assert polygon.vertices == ((0, 3), (1, 1), (3, 0))
        assert len(polygon.support) == 5

    def test_collinear_point_is_not_a_vertex(self):
        polygon = polygon_of((2, 0), (1, 1), (0, 2))
        assert polygon.vertices == ((0, 2), (2, 0))
        segment = polygon.facets[1]
        assert (segment.normal, segment.N, segment.g) == ((1, 1), 2, 2)
        assert polygon.lattice_points(segment) == [(0, 2), (1, 1), (2, 0)]

    def test_two_segments(self):
        polygon = polygon_of(*THREE_TERMS)
        assert polygon.vertices == ((0, 5), (2, 2), (5, 0))
        assert [f.normal for f in polygon.facets] == [(1, 0), (3, 2), (2, 3), (0, 1)]
        assert [f.N for f in polygon.facets] == [0, 10, 10, 0]
        assert polygon.compact_indices == [1, 2]
        assert polygon.facets_at_vertex(1) == (1, 2)

    def test_monomials(self):
        xy = polygon_of((1, 1))
        assert xy.vertices == ((1, 1),)
        assert [(f.N, f.nu) for f in xy.facets] == [(1, 1), (1, 1)]
        x = polygon_of((1, 0))
        assert [(f.N, f.nu) for f in x.facets] == [(1, 1), (0, 1)]

    def test_weight_and_coefficients(self):
        support = support_from_mapping({(2, 0): 3, (0, 3): -1})
        polygon = build_polygon(support)
        assert polygon.weight((1, 1)) == 2
        assert polygon.coefficients() == {(2, 0): 3, (0, 3): -1}

    def test_errors(self):
        with pytest.raises(PolygonError, match="f is zero"):
            build_polygon([])
        with pytest.raises(PolygonError, match="f\\(0\\)"):
            polygon_of((0, 0), (1, 0))
        with pytest.raises(PolygonError, match="Duplicate"):
            build_polygon([SupportPoint(1, 0), SupportPoint(1, 0, 2)])

    def test_facet_data_index_checked(self):
        polygon = polygon_of(*CUSP)
        assert facet_data(polygon, 1).is_compact
        with pytest.raises(IndexError):
            facet_data(polygon, 3)

    def test_mirror_swaps_facets(self):
        polygon = polygon_of((5, 0), (1, 2), (0, 7))
        mirror = polygon_of((0, 5), (2, 1), (7, 0))
        assert mirror.vertices == tuple((y, x) for x, y in reversed(polygon.vertices))
        assert [(f.N, f.nu) for f in mirror.facets] == [(f.N, f.nu) for f in reversed(polygon.facets)]

    def test_staircase_vertices(self):
        assert staircase_vertices([(4, 4), (0, 6), (3, 1), (6, 0), (1, 3)]) == [
            (0, 6), (1, 3), (3, 1), (6, 0)
        ]


class TestFacetClassification:
    def test_candidate_pole(self):
        polygon = polygon_of(*CUSP)
        assert candidate_pole(polygon.facets[1]) == Fraction(-5, 6)
        assert candidate_pole(polygon.facets[0]) is None
        assert candidate_pole(polygon_of((0, 5), (1, 2)).facets[2]) == Fraction(-1, 2)

    def test_b1_flags(self):
        assert is_B1(polygon_of((1, 0), (0, 1)).facets[1]) is B1Flag.B1_BOTH
        assert is_B1(polygon_of((0, 5), (1, 2)).facets[1]) is B1Flag.B1_X
        assert is_B1(polygon_of((5, 0), (2, 1)).facets[1]) is B1Flag.B1_Y
        assert is_B1(polygon_of(*CUSP).facets[1]) is B1Flag.NOT_B1
        assert not is_B1(polygon_of(*CUSP).facets[0]).is_b1

    def test_diagonal_point_matches_candidate(self):
        polygon = polygon_of(*CUSP)
        segment = polygon.facets[1]
        r = diagonal_point(segment)
        assert r == Fraction(6, 5)
        assert Fraction(segment.nu, segment.N) == 1 / r

    def test_diagonal_point_of_rays(self):
        polygon = polygon_of((2, 5), (4, 3))
        assert diagonal_point(polygon.facets[0]) == 2
        assert diagonal_point(polygon.facets[-1]) == 3
        assert diagonal_point(polygon_of(*CUSP).facets[0]) is None

    def test_diagonal_position(self):
        cusp = polygon_of(*CUSP)
        assert diagonal_position(cusp.facets[1]) is DiagonalPosition.CROSSING
        assert diagonal_position(cusp.facets[0]) is DiagonalPosition.ABOVE
        assert diagonal_position(cusp.facets[2]) is DiagonalPosition.BELOW
        assert diagonal_position(polygon_of((0, 5), (1, 2)).facets[1]) is DiagonalPosition.ABOVE
        assert diagonal_position(polygon_of((5, 0), (2, 1)).facets[1]) is DiagonalPosition.BELOW

    def test_shared_vertex(self):
        polygon = polygon_of(*THREE_TERMS)
        assert shared_vertex(polygon, 1, 2) == (2, 2)
        assert shared_vertex(polygon, 2, 1) == (2, 2)
        assert shared_vertex(polygon, 0, 2) is None


class TestCones:
    def test_determinant(self):
        assert determinant((1, 0), (3, 2)) == 2
        assert determinant((3, 2), (1, 0)) == -2

    def test_vertex_cones_of_cusp(self):
        polygon = polygon_of(*CUSP)
        left = vertex_dual_cone(polygon, 0)
        right = vertex_dual_cone(polygon, 1)
        assert (left.generators, left.mult) == (((1, 0), (3, 2)), 2)
        assert (right.generators, right.mult) == (((3, 2), (0, 1)), 3)

    def test_facet_ray(self):
        polygon = polygon_of(*CUSP)
        ray = facet_dual_cone(polygon.facets[1])
        assert ray == Cone2(generators=((3, 2),), mult=1)

    def test_endpoint_multiplicity_is_N_times_g(self):
        polygon = polygon_of((2, 0), (0, 2))
        segment = polygon.facets[1]
        assert endpoint_cone_mult(segment) == 4 == segment.N * segment.g
        with pytest.raises(ValueError):
            endpoint_cone_mult(polygon.facets[0])

    def test_invalid_cones(self):
        with pytest.raises(ValueError):
            cone((2, 2))
        with pytest.raises(ValueError):
            cone((1, 0), (-1, 1))
        with pytest.raises(ValueError):
            Cone2(generators=((1, 0), (0, 1)), mult=2)
