"""
Tests for scaled G-spaces and induced scales.
"""
import math
import unittest

import config
from groups import parse_group
from scales import gspace_check, gspace_from_name, induced_scale_eval, uniform_translation_probe, validate_action
from scales.report import Verdict
from utils.errors import DomainError


class TestGSpaces(unittest.TestCase):
    """
    Test cases for the G-space probes.
    """

    def setUp(self):
        """
        Set up test environment before each test.
        """
        self.translate = gspace_from_name("translate", "one_plus_abs")

    def test_registered_actions_are_actions(self):
        """
        Test the action laws of the translation and affine spaces.
        """
        validate_action(self.translate)
        validate_action(gspace_from_name("affine", "axb_omega"))

    def test_translation_space_is_scaled(self):
        """
        Test σ(n + r) ≤ (1+|n|)(1+|r|) with l = 1.
        """
        report = gspace_check(self.translate, 200, seed=1)
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(report.constants["l"], 1)
        self.assertEqual(report.evidence["space"], "translate")

    def test_constant_weight_fails_on_translation(self):
        """
        Test that ω ≡ 1 cannot bound σ(n + 0) = 1 + |n|.
        """
        report = gspace_check(gspace_from_name("translate", "const:1"), 200, seed=1)
        self.assertEqual(report.verdict, Verdict.VIOLATED)
        self.assertGreater(report.witness["lhs_log"], report.witness["bound_log"])
        self.assertNotIn("analytic_bound", report.evidence)

    def test_affine_space_reports_both_constants(self):
        """
        Test the affine space with l = 1 and its closed-form constant 2 alongside the fitted one.
        """
        report = gspace_check(gspace_from_name("affine", "axb_omega"), 200, seed=3)
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(report.constants["l"], 1)
        self.assertLessEqual(report.constants["C"], 2.0)
        self.assertEqual(report.evidence["analytic_bound"], {"l": 1, "C": 2.0})
        self.assertTrue(report.evidence["within_analytic_bound"])

    def test_gl_conjugation_needs_square_weight(self):
        """
        Test that conjugation on matrices is scaled with l = 2 at the default levels.
        """
        for n in (2, 3):
            report = gspace_check(gspace_from_name("gl-conjugate", "gl_theta", n=n), 200, seed=0)
            self.assertEqual(report.verdict, Verdict.HOLDS)
            self.assertEqual(report.constants["l"], 2)
            self.assertEqual(report.evidence["levels"], config.SAMPLER_LEVELS)
            self.assertTrue(report.evidence["within_analytic_bound"])

    def test_gl_vector_space(self):
        """
        Test that left multiplication on vectors is scaled with l = 1.
        """
        report = gspace_check(gspace_from_name("gl-vector", "gl_theta", n=3), 200, seed=2)
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(report.constants["l"], 1)
        self.assertTrue(report.evidence["within_analytic_bound"])

    def test_uniform_translation(self):
        """
        Test the uniform bound over a compact set of shifts.
        """
        report = uniform_translation_probe(self.translate, 100, radius=1)
        self.assertEqual(report.verdict, Verdict.HOLDS)

    def test_unknown_space(self):
        """
        Test that unknown G-space names raise DomainError.
        """
        with self.assertRaises(DomainError):
            gspace_from_name("mobius", "one_plus_abs")

    def test_bad_sample_count(self):
        """
        Test the sample count range of gspace_check.
        """
        with self.assertRaises(DomainError):
            gspace_check(self.translate, 0)


class TestInducedScale(unittest.TestCase):
    """
    Test cases for induced_scale_eval.
    """

    def setUp(self):
        """
        Set up test environment before each test.
        """
        self.circle = gspace_from_name("rotate-circle", "one_plus_abs")
        self.real = parse_group("r:1")

    def test_nearest_subgroup_element_wins(self):
        """
        Test that [3.4, m] is bounded by ω(0.4) through n = 3.
        """
        g = self.real.parse_element("3.4")
        value = induced_scale_eval(self.circle, (g, 0.2), 8)
        self.assertAlmostEqual(value.log_value, math.log(1.4))
        self.assertEqual(value.minimizer.payload, (3,))
        self.assertTrue(value.upper_bound)

    def test_induced_scale_is_at_most_two(self):
        """
        Test that every coset of the circle space has induced scale at most 2.
        """
        for r in ("0", "0.5", "-2.5", "7.9", "100.25", "-41.6"):
            g = self.real.parse_element(r)
            for m in (0.0, 0.3, 0.75):
                value = induced_scale_eval(self.circle, (g, m), 4)
                self.assertLessEqual(value.log_value, math.log(2.0) + 1e-12)
                self.assertLessEqual(value.value, 2.0 + 1e-9)

    def test_requires_induction_data(self):
        """
        Test that spaces without a subgroup structure cannot be induced.
        """
        g = parse_group("z").parse_element("1")
        with self.assertRaises(DomainError):
            induced_scale_eval(self.translate_space(), (g, 0.0), 2)
        with self.assertRaises(DomainError):
            induced_scale_eval(self.circle, (self.real.parse_element("1"), 0.0), -1)

    def translate_space(self):
        return gspace_from_name("translate", "one_plus_abs")


if __name__ == "__main__":
    unittest.main()
