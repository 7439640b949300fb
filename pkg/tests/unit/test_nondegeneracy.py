"""Tests for the Newton nondegeneracy check."""

from fractions import Fraction

from curve_zeta.criterion import edge_polynomial, has_singular_torus_root, nondegeneracy_check
from curve_zeta.exactnum import UniPoly, poly_from_ints
from curve_zeta.geometry import build_polygon, support_from_exponents, support_from_mapping


def check(support):
    return nondegeneracy_check(support, build_polygon(support))


class TestSingularTorusRoot:
    def test_simple_roots(self):
        assert not has_singular_torus_root(poly_from_ints([1, 1]))
        assert not has_singular_torus_root(poly_from_ints([-1, 0, 1]))

    def test_double_root(self):
        assert has_singular_torus_root(poly_from_ints([1, 2, 1]))
        assert has_singular_torus_root(poly_from_ints([4, -4, 1]))

    def test_double_root_at_zero_is_ignored(self):
        assert not has_singular_torus_root(UniPoly((0, 0, 1)))
        assert not has_singular_torus_root(UniPoly((0, 0, 1, 1)))

    def test_rational_double_root(self):
        # (2t - 1)^2 (t + 3)
        p = poly_from_ints([1, -4, 4]) * poly_from_ints([3, 1])
        assert has_singular_torus_root(p)


class TestEdgePolynomial:
    def test_reads_lattice_points_from_start(self):
        support = support_from_mapping({(0, 4): 1, (1, 2): -3, (2, 0): 5})
        polygon = build_polygon(support)
        assert edge_polynomial(polygon.facets[1], polygon) == UniPoly((1, -3, 5))
        assert edge_polynomial(polygon.facets[1], polygon, reverse=True) == UniPoly((5, -3, 1))

    def test_missing_lattice_points_are_zero(self):
        support = support_from_mapping({(0, 3): 2, (3, 0): Fraction(1, 2)})
        polygon = build_polygon(support)
        assert edge_polynomial(polygon.facets[1], polygon) == UniPoly((2, 0, 0, Fraction(1, 2)))


class TestNondegeneracyCheck:
    def test_cusp(self):
        report = check(support_from_exponents([(2, 0), (0, 3)]))
        assert report.nondegenerate
        assert report.degenerate_faces == []
        # two vertices and one edge
        assert len(report.faces) == 3

    def test_square_is_degenerate(self):
        report = check(support_from_mapping({(2, 0): 1, (1, 1): 2, (0, 2): 1}))
        assert not report.nondegenerate
        [status] = report.degenerate_faces
        assert status.polynomial == poly_from_ints([1, 2, 1])
        assert "(0, 2)" in status.describe()

    def test_difference_of_squares_is_nondegenerate(self):
        assert check(support_from_mapping({(2, 0): 1, (0, 2): -1})).nondegenerate

    def test_monomial(self):
        report = check(support_from_exponents([(3, 2)]))
        assert report.nondegenerate
        assert [s.describe() for s in report.faces] == ["vertex (3, 2)"]

    def test_interior_points_do_not_matter(self):
        support = support_from_mapping({(2, 0): 1, (0, 2): 1, (1, 1): 2, (2, 2): 7})
        assert not check(support).nondegenerate
        support = support_from_mapping({(2, 0): 1, (0, 2): 1, (2, 2): 7})
        assert check(support).nondegenerate

    def test_orientation_does_not_matter(self):
        supports = [
            support_from_mapping({(0, 4): 1, (1, 2): -2, (2, 0): 1}),
            support_from_mapping({(0, 6): 1, (2, 3): 3, (4, 0): -1}),
            support_from_mapping({(0, 6): 1, (1, 4): -3, (2, 2): 3, (3, 0): -1}),
        ]
        for support in supports:
            polygon = build_polygon(support)
            for index in polygon.compact_indices:
                facet = polygon.facets[index]
                forward = edge_polynomial(facet, polygon)
                backward = edge_polynomial(facet, polygon, reverse=True)
                assert has_singular_torus_root(forward) == has_singular_torus_root(backward)
