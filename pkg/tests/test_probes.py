"""
Tests for exponent fitting and the scale probes.
"""
import math
import unittest

from groups import ball_enumerate, parse_group
from scales import (
    EvidenceItem,
    check_axioms,
    dominates_probe,
    fit_exponent,
    m_sub_polynomial_probe,
    parse_scale,
    strong_dominates_probe,
    sub_polynomial_probe,
    translation_equiv_probe,
)
from scales.report import Verdict


class TestFitExponent(unittest.TestCase):
    """
    Test cases for fit_exponent.
    """

    def setUp(self):
        """
        Set up test environment before each test.
        """
        self.levels = [[EvidenceItem(2 * math.log(n), math.log(n))] for n in range(1, 9)]

    def test_fits_smallest_exponent(self):
        """
        Test that n² ≤ C·n^e is fitted with e = 2 and C = 1.
        """
        fit = fit_exponent(self.levels, range(0, 9), with_offset=False)
        self.assertEqual(fit.status, "fit")
        self.assertEqual(fit.exponent, 2)
        self.assertAlmostEqual(fit.log_C, 0.0)

    def test_too_few_levels_is_undecided(self):
        """
        Test that fewer than three levels never decide.
        """
        fit = fit_exponent(self.levels[:2], range(0, 9), with_offset=False)
        self.assertEqual(fit.status, "undecided")

    def test_growth_when_exponents_run_out(self):
        """
        Test that n² against n with exponents up to 1 is growth.
        """
        fit = fit_exponent(self.levels, range(0, 2), with_offset=False)
        self.assertEqual(fit.status, "growth")
        self.assertIsNotNone(fit.witness)


class TestScaleProbes(unittest.TestCase):
    """
    Test cases for the domination, translation and growth-condition probes.
    """

    def setUp(self):
        """
        Set up test environment before each test.
        """
        self.z = parse_group("z")
        self.table = ball_enumerate(self.z, None, 10)

    def test_word_dominates_itself(self):
        """
        Test σ ≼ σ with m = 1 and C = 1.
        """
        word = parse_scale("word", self.z)
        report = dominates_probe(word, word, self.table)
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(report.constants["m"], 1)
        self.assertAlmostEqual(report.constants["C"], 1.0)
        self.assertEqual(report.constants["D"], 0.0)

    def test_square_exponential_not_dominated(self):
        """
        Test that e^{n²} is not dominated by any power of n.
        """
        report = dominates_probe(parse_scale("word_pow:2", self.z), parse_scale("word", self.z), self.table)
        self.assertEqual(report.verdict, Verdict.VIOLATED)
        self.assertGreater(report.witness["lhs_log"], report.witness["bound_log"])

    def test_strong_domination(self):
        """
        Test that word length and ℓ¹ norm on Z^2 strongly dominate each other.
        """
        z2 = parse_group("z:2")
        table = ball_enumerate(z2, None, 6)
        report = strong_dominates_probe(parse_scale("word", z2), parse_scale("abs", z2), table)
        self.assertEqual(report.verdict, Verdict.HOLDS)

    def test_superexponential_is_not_sub_polynomial(self):
        """
        Test that e^{|n|^{|n|}} fails the sub-polynomial condition.
        """
        report = sub_polynomial_probe(parse_scale("superexp", self.z), self.table)
        self.assertEqual(report.verdict, Verdict.VIOLATED)
        self.assertIn("g", report.witness["item"])

    def test_polynomial_weight_is_sub_polynomial(self):
        """
        Test that 1 + |n| is sub-polynomial with d = 1.
        """
        report = sub_polynomial_probe(parse_scale("one_plus_abs", self.z), self.table)
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(report.constants["d"], 1)
        self.assertEqual(report.evidence["pair_radius"], 5)

    def test_translation_equivalence(self):
        """
        Test that shifting 1 + |n| by one is dominated with d = 1.
        """
        scale = parse_scale("one_plus_abs", self.z)
        report = translation_equiv_probe(scale, [self.z.parse_element("1")], self.table)
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(report.constants["d"], 1)
        self.assertEqual(report.evidence["shift"], ["1"])

    def test_m_sub_polynomial(self):
        """
        Test the chain condition for 1 + |n| and for e^{n²}.
        """
        report = m_sub_polynomial_probe(parse_scale("one_plus_abs", self.z), 8)
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(report.constants["l"], 1)

        report = m_sub_polynomial_probe(parse_scale("word_pow:2", self.z), 8, l_max=3)
        self.assertEqual(report.verdict, Verdict.VIOLATED)


class TestHeisenbergScale(unittest.TestCase):
    """
    Test cases comparing s(g) = |a| + |c| + |b|^(1/2) + |b - ca|^(1/2) with the word gauge.
    """

    def setUp(self):
        """
        Set up test environment before each test.
        """
        self.heis = parse_group("heis")
        self.table = ball_enumerate(self.heis, None, 12)
        self.word = parse_scale("word", self.heis, self.table)
        self.s = parse_scale("heis_s", self.heis)

    def test_word_and_s_dominate_each_other(self):
        """
        Test that each of word and s dominates the other on the ball of radius 12.
        """
        for lhs, rhs in ((self.word, self.s), (self.s, self.word)):
            report = dominates_probe(lhs, rhs, self.table)
            self.assertEqual(report.verdict, Verdict.HOLDS)
            self.assertLessEqual(report.constants["m"], 2)

    def test_s_is_a_near_gauge(self):
        """
        Test s(gh) <= 3(s(g) + s(h)) over the ball pairs.
        """
        report = check_axioms(self.s, "gauge", ball_enumerate(self.heis, None, 8), constant=3)
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertGreater(report.evidence["pairs"], 0)


if __name__ == "__main__":
    unittest.main()
