"""Tests for the B1-facet pole criterion verdict."""

from fractions import Fraction

from curve_zeta.criterion import CriterionEntry, predicted_poles, verify_criterion
from curve_zeta.geometry import build_polygon, support_from_exponents, support_from_mapping


def verdict_of(*exponents):
    return verify_criterion(support_from_exponents(exponents))


class TestPredictedPoles:
    def test_cusp(self):
        assert predicted_poles(build_polygon(support_from_exponents([(2, 0), (0, 3)]))) == {
            Fraction(-5, 6)
        }

    def test_b1_facets_predict_nothing(self):
        assert predicted_poles(build_polygon(support_from_exponents([(1, 0), (0, 1)]))) == set()

    def test_ray_predicts_pole(self):
        polygon = build_polygon(support_from_exponents([(0, 5), (1, 2)]))
        assert predicted_poles(polygon) == {Fraction(-1, 2)}


class TestCriterionEntry:
    def test_adjacent_pair_needs_order_two(self):
        entry = CriterionEntry(Fraction(-1, 2), (1, 2), predicted_pole=True, actual_pole=True, order=1)
        assert entry.adjacent_pair
        assert not entry.agree
        assert "DISAGREE" in entry.describe()
        assert CriterionEntry(Fraction(-1, 2), (1, 2), True, True, order=2).agree

    def test_non_adjacent_pair(self):
        entry = CriterionEntry(Fraction(-1, 6), (1, 3), True, True, order=1)
        assert not entry.adjacent_pair
        assert entry.agree

    def test_missed_pole(self):
        entry = CriterionEntry(Fraction(-4, 5), (1,), predicted_pole=False, actual_pole=True, order=1)
        assert not entry.agree


class TestVerifyCriterion:
    def test_cusp(self):
        verdict = verdict_of((2, 0), (0, 3))
        assert verdict.hypotheses_met
        assert verdict.agree
        assert verdict.residues_match
        assert [(e.value, e.order) for e in verdict.entries] == [(Fraction(-5, 6), 1)]
        [check] = verdict.residue_checks
        assert (check.value, check.computed, check.expected) == (
            Fraction(-5, 6), Fraction(5, 3), Fraction(5, 3)
        )
        assert verdict.low_candidates == ()

    def test_b1_both_candidate_below_minus_one(self):
        verdict = verdict_of((1, 0), (0, 1))
        assert verdict.agree
        [entry] = verdict.entries
        assert entry.value == -2
        assert not entry.predicted_pole and not entry.actual_pole
        assert verdict.low_candidates == (Fraction(-2),)
        assert verdict.residue_checks == ()

    def test_b1_facet_and_ray(self):
        verdict = verdict_of((0, 5), (1, 2))
        assert verdict.agree
        assert verdict.predicted == {Fraction(-1, 2)}
        assert verdict.actual == {Fraction(-1, 2)}
        [check] = verdict.residue_checks
        assert check.computed == check.expected == 1

    def test_adjacent_facets(self):
        verdict = verdict_of((5, 0), (2, 2), (0, 5))
        assert verdict.agree
        [entry] = verdict.entries
        assert entry.adjacent_pair and entry.order == 2
        assert verdict.residue_checks == ()

    def test_non_adjacent_facets(self):
        verdict = verdict_of((0, 24), (4, 12), (10, 4), (18, 0))
        assert verdict.agree
        assert verdict.residues_match
        checks = {c.value: c for c in verdict.residue_checks}
        assert checks[Fraction(-1, 6)].computed == Fraction(-7, 60)
        assert Fraction(-7, 52) in checks

    def test_degenerate_input_is_formal(self):
        support = support_from_mapping({(2, 0): 1, (1, 1): 2, (0, 2): 1})
        verdict = verify_criterion(support)
        assert not verdict.hypotheses_met
        assert not verdict.nondegeneracy.nondegenerate
        assert "formal value: nondegeneracy failed" in verdict.details()

    def test_reuses_given_polygon(self):
        support = support_from_exponents([(3, 0), (2, 2), (0, 4)])
        polygon = build_polygon(support)
        assert verify_criterion(support, polygon=polygon).agree
