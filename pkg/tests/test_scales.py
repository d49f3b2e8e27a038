"""
Tests for scales and the gauge and weight axioms.
"""
import math
import unittest
from fractions import Fraction

from groups import ball_enumerate, parse_group
from scales import check_axioms, eval_scale, exp_bijection, normalize_gauge, parse_scale
from scales.report import Verdict
from utils.errors import DomainError, GroupSpecError, ScaleNotFoundError, UnsupportedOperationError


class TestScaleParsing(unittest.TestCase):
    """
    Test cases for parse_scale and scale arithmetic.
    """

    def setUp(self):
        """
        Set up test environment before each test.
        """
        self.z = parse_group("z")
        self.z2 = parse_group("z:2")

    def test_exact_scales(self):
        """
        Test exact values of the lattice scales.
        """
        word = parse_scale("word", self.z2)
        g = self.z2.parse_element("2,-3")
        self.assertEqual(word.exact_value(g), Fraction(5))
        self.assertAlmostEqual(eval_scale(word, g), math.log(5))

        one_plus = parse_scale("one_plus_abs", self.z)
        self.assertEqual(one_plus.exact_value(self.z.parse_element("-4")), Fraction(5))
        self.assertEqual(one_plus.kind, "weight")

    def test_log_domain_scales(self):
        """
        Test that huge scales are carried as logs.
        """
        superexp = parse_scale("superexp", self.z)
        self.assertEqual(superexp.log_value(self.z.parse_element("10")), 1e10)
        pow2 = parse_scale("word_pow:2", self.z)
        self.assertEqual(pow2.log_value(self.z.parse_element("-3")), 9.0)

    def test_word_scale_needs_ball_without_closed_form(self):
        """
        Test that word scales on the Heisenberg group need an enumerated ball.
        """
        heis = parse_group("heis")
        with self.assertRaises(ScaleNotFoundError):
            parse_scale("word", heis)
        table = ball_enumerate(heis, None, 4)
        word = parse_scale("word", heis, table)
        self.assertEqual(word.exact_value(heis.parse_element("1,1,1")), Fraction(2))
        with self.assertRaises(ScaleNotFoundError):
            word.log_value(heis.parse_element("9,0,0"))

    def test_unknown_and_misplaced_scales(self):
        """
        Test parse errors and scales used on the wrong group.
        """
        with self.assertRaises(GroupSpecError):
            parse_scale("bogus", self.z)
        with self.assertRaises(GroupSpecError):
            parse_scale("const:0", self.z)
        with self.assertRaises(UnsupportedOperationError):
            parse_scale("heis_s", self.z)

    def test_translate_and_reflect(self):
        """
        Test σ_g(h) = σ(g⁻¹h) and σ₋(h) = σ(h⁻¹).
        """
        coord = parse_scale("one_plus_abs", self.z)
        shifted = coord.translate(self.z.parse_element("2"))
        self.assertAlmostEqual(shifted.log_value(self.z.identity()), math.log(3))
        self.assertAlmostEqual(coord.reflect().log_value(self.z.parse_element("4")), math.log(5))


class TestAxioms(unittest.TestCase):
    """
    Test cases for check_axioms, normalize_gauge and exp_bijection.
    """

    def setUp(self):
        """
        Set up test environment before each test.
        """
        self.z = parse_group("z")
        self.z2 = parse_group("z:2")
        self.table = ball_enumerate(self.z, None, 6)

    def test_word_length_is_a_gauge(self):
        """
        Test that the word length passes the gauge axioms.
        """
        table = ball_enumerate(self.z2, None, 6)
        report = check_axioms(parse_scale("word", self.z2), "gauge", table)
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(report.evidence["radius"], 6)
        self.assertGreater(report.evidence["pairs"], 0)

    def test_one_plus_abs_is_a_weight(self):
        """
        Test that 1 + |n| is submultiplicative.
        """
        report = check_axioms(parse_scale("one_plus_abs", self.z), "weight", self.table)
        self.assertEqual(report.verdict, Verdict.HOLDS)

    def test_square_exponential_is_not_a_weight(self):
        """
        Test that e^{n²} fails submultiplicativity.
        """
        report = check_axioms(parse_scale("word_pow:2", self.z), "weight", self.table)
        self.assertEqual(report.verdict, Verdict.VIOLATED)
        self.assertEqual(report.witness["axiom"], "submultiplicativity")

    def test_gauge_constant(self):
        """
        Test that |n|² is a gauge only up to a constant K.
        """
        square = parse_scale("abs_pow:2", self.z)
        self.assertEqual(check_axioms(square, "gauge", self.table).verdict, Verdict.VIOLATED)
        report = check_axioms(square, "gauge", self.table, constant=2)
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(report.constants["K"], 2)

    def test_identity_axiom(self):
        """
        Test that a constant 2 is not a weight.
        """
        report = check_axioms(parse_scale("const:2", self.z), "weight", self.table)
        self.assertEqual(report.verdict, Verdict.VIOLATED)
        self.assertEqual(report.witness["axiom"], "identity")

    def test_bad_kind(self):
        """
        Test that only gauge and weight are accepted kinds.
        """
        with self.assertRaises(DomainError):
            check_axioms(parse_scale("word", self.z), "norm", self.table)

    def test_normalize_gauge(self):
        """
        Test the integer normalization max(1, ⌈τ⌉) away from the identity.
        """
        normalized = normalize_gauge(parse_scale("half_abs", self.z))
        values = [normalized.exact_value(self.z.parse_element(str(n))) for n in (0, 1, 2, 3)]
        self.assertEqual(values, [0, 1, 1, 2])
        self.assertEqual(check_axioms(normalized, "gauge", self.table, constant=2).verdict, Verdict.HOLDS)

    def test_exp_bijection(self):
        """
        Test ω = e^τ and τ = log ω.
        """
        word = parse_scale("word", self.z)
        weight = exp_bijection(word, "gauge_to_weight")
        self.assertEqual(weight.log_value(self.z.parse_element("3")), 3.0)
        self.assertEqual(weight.log_value(self.z.identity()), 0.0)
        self.assertEqual(check_axioms(weight, "weight", self.table).verdict, Verdict.HOLDS)

        gauge = exp_bijection(parse_scale("one_plus_abs", self.z), "weight_to_gauge")
        self.assertAlmostEqual(gauge.value(self.z.parse_element("4")), math.log(5))
        self.assertEqual(gauge.log_value(self.z.identity()), -math.inf)

        with self.assertRaises(DomainError):
            exp_bijection(word, "weight_to_gauge")


if __name__ == "__main__":
    unittest.main()
