"""
Tests for grid quadrature on R^N and the convolution power bound.
"""
import math
import unittest
from unittest.mock import patch

import numpy as np

import config
from euclid import (
    GridFunction,
    WeightSpec,
    bump_eval,
    conv_power_bound_check,
    grid_convolve,
    log_norm_bound,
    log_root_bound,
    shifted_bump,
)
from scales.report import Verdict
from utils.errors import DomainError


class TestBump(unittest.TestCase):
    """
    Test cases for the bump function and grid sampling.
    """

    def setUp(self):
        """
        Set up test environment before each test.
        """
        self.h = 1.0 / 64

    def test_bump_values(self):
        """
        Test ψ = 1 inside the unit cube, 0 outside twice it, 1/2 halfway.
        """
        self.assertEqual(bump_eval(0.0), 1.0)
        self.assertEqual(bump_eval(3.0), 0.0)
        self.assertAlmostEqual(bump_eval(1.5), 0.5)
        self.assertAlmostEqual(bump_eval([0.5, 1.5]), 0.5)
        self.assertEqual(bump_eval([0.9, -0.9]), 1.0)

    def test_bump_mass(self):
        """
        Test ∫ψ = 3 on R.
        """
        psi = GridFunction.sample(bump_eval, self.h, [-2.0], [2.0])
        self.assertAlmostEqual(psi.mass(), 3.0, places=6)
        self.assertEqual(psi.origin, (-128,))

    def test_convolution_mass_and_symmetry(self):
        """
        Test ∫(f*g) = ∫f ∫g and f*g = g*f.
        """
        f = shifted_bump(1, self.h)
        g = GridFunction.sample(bump_eval, self.h, [-2.0], [2.0])
        fg = grid_convolve(f, g)
        gf = grid_convolve(g, f)
        self.assertAlmostEqual(fg.mass(), f.mass() * g.mass(), places=9)
        np.testing.assert_allclose(fg.values, gf.values, atol=1e-12)
        self.assertEqual(fg.origin, gf.origin)

    def test_grid_mismatch(self):
        """
        Test that spacing and dimension mismatches raise DomainError.
        """
        with self.assertRaises(DomainError):
            grid_convolve(shifted_bump(1, 0.5), shifted_bump(1, 0.25))
        with self.assertRaises(DomainError):
            grid_convolve(shifted_bump(1, 0.5), shifted_bump(2, 0.5))
        with self.assertRaises(DomainError):
            GridFunction.sample(bump_eval, 0.0, [-1.0], [1.0])

    def test_weight_exponent(self):
        """
        Test that the weight exponent is an integer of at least 2.
        """
        with self.assertRaises(DomainError):
            WeightSpec(1)
        np.testing.assert_allclose(WeightSpec(2).log_value(np.array([[1.0, -3.0]])), [9.0])


class TestConvolutionPowers(unittest.TestCase):
    """
    Test cases for conv_power_bound_check.
    """

    def setUp(self):
        """
        Set up test environment before each test.
        """
        self.h = 1.0 / 64

    def test_bounds(self):
        """
        Test the closed forms of the norm and root bounds.
        """
        self.assertAlmostEqual(log_norm_bound(2, 2, 1), 1 - 2 * math.log(2))
        self.assertAlmostEqual(log_root_bound(3, 2, 1), 2 - math.log(3))

    def test_square_holds(self):
        """
        Test the bound for ψ₁*ψ₁ on R with δ₂.
        """
        report = conv_power_bound_check(2, 2, 1, self.h)
        self.assertEqual(report.verdict, Verdict.HOLDS)
        rows = report.evidence["rows"]
        self.assertEqual([row["n"] for row in rows], [1, 2])
        self.assertTrue(all(row["log_norm"] > row["log_bound"] for row in rows))

    def test_fifth_power_holds(self):
        """
        Test powers up to five on a fine grid.
        """
        report = conv_power_bound_check(5, 2, 1, 1.0 / 256)
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertTrue(report.evidence["root_bounds_increasing"])

    def test_box_overflow(self):
        """
        Test that the work guard refuses large direct convolutions.
        """
        with patch.object(config, "EUCLID_MAX_WORK", 10):
            with self.assertRaises(DomainError) as ctx:
                conv_power_bound_check(2, 2, 1, self.h)
        self.assertIn("Box overflow", str(ctx.exception))

    def test_bad_arguments(self):
        """
        Test the argument ranges.
        """
        with self.assertRaises(DomainError):
            conv_power_bound_check(0, 2, 1, self.h)
        with self.assertRaises(DomainError):
            conv_power_bound_check(2, 2, 1, -1.0)
        with self.assertRaises(DomainError):
            shifted_bump(0, self.h)


if __name__ == "__main__":
    unittest.main()
