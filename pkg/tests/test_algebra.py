"""
Tests for the weighted ℓ¹ algebra and the worked examples.
"""
import math
import unittest
from fractions import Fraction

import numpy as np

from algebra import (
    WeightedFunction,
    conv_bound_check,
    convolve,
    delta_power_ratio,
    divergence_partial_sums,
    involution,
    mconvexity_probe,
    seminorm,
    strong_tempered_failure,
    tempered_action_demo,
)
from groups import parse_group
from groups.sampling import random_element
from scales import parse_scale
from scales.report import Verdict
from utils.errors import DomainError, GroupMismatchError, GroupSpecError


class TestConvolution(unittest.TestCase):
    """
    Test cases for convolution, seminorms and the involution.
    """

    def setUp(self):
        """
        Set up test environment before each test.
        """
        self.z = parse_group("z")
        self.coord = parse_scale("one_plus_abs", self.z)
        self.phi = WeightedFunction.parse(self.z, [("1", "2"), ("-3", "1")], scale=self.coord)

    def test_convolution_square(self):
        """
        Test (δ₀ + δ₁)² = δ₀ + 2δ₁ + δ₂.
        """
        f = WeightedFunction.parse(self.z, [("0", "1"), ("1", "1")])
        square = convolve(f, f)
        self.assertEqual([c for _, c in square], [1, 2, 1])
        self.assertEqual([g.payload for g in square.support], [(0,), (1,), (2,)])

    def test_exact_seminorms(self):
        """
        Test ‖2δ₁ + δ₋₃‖_m for m = 0, 1, 2.
        """
        self.assertEqual(seminorm(self.phi, 0).exact, Fraction(3))
        self.assertEqual(seminorm(self.phi, 1).exact, Fraction(8))
        self.assertEqual(seminorm(self.phi, 2).exact, Fraction(24))
        self.assertAlmostEqual(seminorm(self.phi, 1).log_value, math.log(8))

    def test_involution(self):
        """
        Test φ*(g) = φ(g⁻¹) and φ** = φ.
        """
        star = involution(self.phi)
        self.assertEqual(star.coefficient(self.z.parse_element("-1")), 2)
        self.assertEqual(star.coefficient(self.z.parse_element("3")), 1)
        self.assertTrue(involution(star).equals(self.phi))

    def test_zero_terms_dropped(self):
        """
        Test that cancelling coefficients leave no terms.
        """
        f = WeightedFunction.parse(self.z, [("2", "1/2"), ("2", "-1/2")])
        self.assertEqual(len(f), 0)
        self.assertEqual(seminorm(f, 1, self.coord).log_value, -math.inf)

    def test_errors(self):
        """
        Test bad coefficients, missing scales and mixed groups.
        """
        with self.assertRaises(GroupSpecError):
            WeightedFunction.parse(self.z, [("0", "x")])
        with self.assertRaises(DomainError):
            seminorm(WeightedFunction.parse(self.z, [("0", "1")]), 1)
        with self.assertRaises(DomainError):
            seminorm(self.phi, -1)
        z2 = parse_group("z:2")
        with self.assertRaises(GroupMismatchError):
            convolve(self.phi, WeightedFunction.parse(z2, [("0,0", "1")]))

    def test_convolution_bound(self):
        """
        Test ‖φ*ψ‖₂ ≤ ‖φ‖₂‖ψ‖₂ with the certificate (C, d) = (1, 1).
        """
        f = WeightedFunction.parse(self.z, [("0", "1"), ("1", "1")], scale=self.coord)
        report = conv_bound_check(f, f, 2, (1, 1))
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(report.evidence["lhs"], "18")
        self.assertEqual(report.evidence["rhs"], "169")

    def test_delta_power_ratio(self):
        """
        Test ‖δ₁*δ₁*δ₁‖₁ / σ(1)³ = 4/8.
        """
        ones = [self.z.parse_element("1")] * 3
        self.assertAlmostEqual(delta_power_ratio(self.coord, ones, 1, 1), math.log(0.5))
        with self.assertRaises(DomainError):
            delta_power_ratio(self.coord, [], 1, 1)

    def test_convolution_is_associative(self):
        """
        Test (φ*ψ)*χ = φ*(ψ*χ) exactly on random rational functions.
        """
        rng = np.random.default_rng(11)
        for spec in ("z", "free:2", "heis"):
            group = parse_group(spec)

            def random_function():
                items = []
                for _ in range(int(rng.integers(1, 4))):
                    coefficient = Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 8)))
                    items.append((random_element(group, rng, 3.0), coefficient))
                return WeightedFunction.from_items(group, items)

            for _ in range(50):
                phi, psi, chi = random_function(), random_function(), random_function()
                left = convolve(convolve(phi, psi), chi)
                right = convolve(phi, convolve(psi, chi))
                self.assertEqual(left.terms, right.terms, spec)


class TestMConvexity(unittest.TestCase):
    """
    Test cases for mconvexity_probe.
    """

    def setUp(self):
        """
        Set up test environment before each test.
        """
        self.z = parse_group("z")

    def test_polynomial_weight_is_m_convex(self):
        """
        Test that ℓ¹(Z, 1+|n|) passes with k = 1.
        """
        report = mconvexity_probe(parse_scale("one_plus_abs", self.z), self.z, 8)
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(report.constants["k"], 1)
        self.assertFalse(report.evidence["normalized"])

    def test_square_exponential_is_not_m_convex(self):
        """
        Test that the n-th roots grow for e^{n²}.
        """
        report = mconvexity_probe(parse_scale("word_pow:2", self.z), self.z, 8, k_max=3)
        self.assertEqual(report.verdict, Verdict.VIOLATED)

    def test_short_chains_are_inconclusive(self):
        """
        Test that chains shorter than four decide nothing.
        """
        report = mconvexity_probe(parse_scale("one_plus_abs", self.z), self.z, 3)
        self.assertEqual(report.verdict, Verdict.INCONCLUSIVE)

    def test_scales_below_one_are_shifted(self):
        """
        Test that a gauge vanishing nowhere on generators but below 1 is replaced by 1 + σ.
        """
        report = mconvexity_probe(parse_scale("half_abs", self.z), self.z, 6)
        self.assertTrue(report.evidence["normalized"])
        self.assertTrue(any("1+" in note for note in report.notes))


class TestDemos(unittest.TestCase):
    """
    Test cases for the divergence and tempered-action examples.
    """

    def setUp(self):
        """
        Set up test environment before each test.
        """
        self.harmonic_11 = sum(1.0 / k for k in range(1, 12))

    def test_inverse_sqrt_partial_sums(self):
        """
        Test that the partial sum up to M is 2H_{M+1} − 1.
        """
        table = divergence_partial_sums("inverse-sqrt", 10)
        self.assertTrue(table.monotone)
        self.assertEqual(table.rows[0], {"m": 0, "partial_sum": 1.0})
        self.assertEqual(table.rows[-1]["m"], 10)
        self.assertAlmostEqual(table.rows[-1]["partial_sum"], 2 * self.harmonic_11 - 1)

    def test_superexp_square_terms(self):
        """
        Test the log terms (2m)^m − 2 for m = 1, 2, 3.
        """
        table = divergence_partial_sums("superexp-square", 3)
        self.assertEqual([row["log_term"] for row in table.rows], [0.0, 14.0, 214.0])
        self.assertTrue(table.monotone)

    def test_unknown_case(self):
        """
        Test that unknown divergence cases raise DomainError.
        """
        with self.assertRaises(DomainError):
            divergence_partial_sums("harmonic", 5)

    def test_tempered_action(self):
        """
        Test the norm (1+q)^n and the per-factor action bound.
        """
        demo = tempered_action_demo(2, 3)
        self.assertEqual(demo.norm, 27)
        self.assertTrue(demo.norm_matches)
        self.assertTrue(demo.action_bound_holds)
        with self.assertRaises(DomainError):
            tempered_action_demo(1, 3)

    def test_strong_tempered_failure(self):
        """
        Test the first q where (1+q)^5 exceeds q³ 2⁵ 2⁵.
        """
        row = strong_tempered_failure(5, 3, 2)
        self.assertEqual(row["q"], "30")
        self.assertTrue(row["fails"])
        self.assertIsNone(strong_tempered_failure(3, 3, 2, q_max=100))


if __name__ == "__main__":
    unittest.main()
