"""
Tests for growth classification and the integrability condition.
"""
import math
import unittest

from algebra import WeightedFunction
from groups import ball_enumerate, parse_group
from growth import (
    GrowthModel,
    IntegrabilityVerdict,
    growth_classify,
    growth_consistency_check,
    growth_table,
    holder_embedding_check,
    integrability_sum,
)
from scales import parse_scale
from scales.report import Verdict
from utils.errors import DomainError


class TestGrowth(unittest.TestCase):
    """
    Test cases for growth_table and growth_classify.
    """

    def setUp(self):
        """
        Set up test environment before each test.
        """
        self.z2 = parse_group("z:2")

    def test_lattice_is_quadratic(self):
        """
        Test that Z^2 has polynomial growth of degree 2.
        """
        report = growth_classify(growth_table(self.z2, None, 10))
        self.assertEqual(report.model, GrowthModel.POLYNOMIAL)
        self.assertEqual(report.degree, 2)
        self.assertEqual(report.fit_window, [5, 10])
        self.assertEqual(report.rows()[2], {"n": 2, "shell_size": 8, "ball_size": 13})

    def test_free_group_is_exponential(self):
        """
        Test that the free group on two letters grows like 3^n.
        """
        report = growth_classify(growth_table(parse_group("free:2"), None, 8))
        self.assertEqual(report.model, GrowthModel.EXPONENTIAL)
        self.assertAlmostEqual(report.rate, math.log(3), places=2)
        self.assertIsNone(report.degree)

    def test_heisenberg_is_quartic(self):
        """
        Test the degree 4 growth of the Heisenberg group.
        """
        report = growth_classify(growth_table(parse_group("heis"), None, 12))
        self.assertEqual(report.model, GrowthModel.POLYNOMIAL)
        self.assertEqual(report.degree, 4)

    def test_too_few_shells(self):
        """
        Test that fewer than six shells leave the model undetermined.
        """
        report = growth_classify(growth_table(self.z2, None, 4))
        self.assertEqual(report.model, GrowthModel.UNDETERMINED)
        self.assertTrue(report.notes)

    def test_truncation_is_noted(self):
        """
        Test that a capped table says so.
        """
        report = growth_table(self.z2, None, 6, cap=30)
        self.assertTrue(report.truncated)
        self.assertEqual(report.requested_radius, 6)
        self.assertTrue(report.notes)


class TestIntegrability(unittest.TestCase):
    """
    Test cases for integrability_sum and its cross-checks.
    """

    def setUp(self):
        """
        Set up test environment before each test.
        """
        self.z = parse_group("z")
        self.coord = parse_scale("one_plus_abs", self.z)

    def test_inverse_square_converges(self):
        """
        Test Σ (1+|n|)^{-2} with an integral tail certificate.
        """
        radius = 10 ** 4
        result = integrability_sum(self.coord, ball_enumerate(self.z, None, radius), 2)
        self.assertEqual(result.verdict, IntegrabilityVerdict.CONVERGES)
        self.assertEqual(result.certificate["kind"], "integral")
        limit = math.pi ** 2 / 3 - 1
        self.assertAlmostEqual(result.partial_sum, limit, delta=1e-3)
        self.assertAlmostEqual(result.tail_bound, 2.0 / radius)
        self.assertGreaterEqual(result.bound, limit)

    def test_harmonic_diverges(self):
        """
        Test that Σ (1+|n|)^{-1} is reported as divergent.
        """
        result = integrability_sum(self.coord, ball_enumerate(self.z, None, 1000), 1)
        self.assertEqual(result.verdict, IntegrabilityVerdict.DIVERGES)
        self.assertIsNone(result.bound)

    def test_free_group_geometric_certificate(self):
        """
        Test the geometric tail for e^{-2|g|} on the free group.
        """
        free = parse_group("free:2")
        table = ball_enumerate(free, None, 8)
        result = integrability_sum(parse_scale("word_weight", free, table), table, 2)
        self.assertEqual(result.verdict, IntegrabilityVerdict.CONVERGES)
        self.assertEqual(result.certificate["kind"], "geometric")
        self.assertAlmostEqual(result.certificate["ratio"], 3 / math.e ** 2)

        growth = growth_classify(growth_table(free, None, 8))
        self.assertEqual(growth_consistency_check(growth, result).verdict, Verdict.HOLDS)

    def test_vanishing_scale_rejected(self):
        """
        Test that σ^{-p} needs σ > 0.
        """
        with self.assertRaises(DomainError):
            integrability_sum(parse_scale("abs", self.z), ball_enumerate(self.z, None, 3), 2)
        with self.assertRaises(DomainError):
            integrability_sum(self.coord, ball_enumerate(self.z, None, 3), 0)

    def test_holder_embedding(self):
        """
        Test the embedding estimate with a certified, a tiny and a missing constant.
        """
        certified = integrability_sum(self.coord, ball_enumerate(self.z, None, 1000), 2)
        phi = WeightedFunction.parse(self.z, [("0", "1"), ("3", "1")], scale=self.coord)

        report = holder_embedding_check(phi, 1, 2, 2, certified.bound)
        self.assertEqual(report.verdict, Verdict.HOLDS)
        report = holder_embedding_check(phi, 1, 2, 2, 1e-6)
        self.assertEqual(report.verdict, Verdict.VIOLATED)
        report = holder_embedding_check(phi, 1, 2, 2, None)
        self.assertEqual(report.verdict, Verdict.INCONCLUSIVE)
        with self.assertRaises(DomainError):
            holder_embedding_check(phi, 1, 0.5, 2, 1.0)


if __name__ == "__main__":
    unittest.main()
