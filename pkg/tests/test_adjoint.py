"""
Tests for adjoint representations and the explicit weights.
"""
import math
import unittest

import numpy as np

from adjoint import ad_matrix, ad_numeric, adjoint_rep, axb_decompose, bounds_ad_probe, sl2_scales, type_r_probe, unipotent_norm_bound
from adjoint.matrices import closed_form_defect, homomorphism_defect
from groups import ball_enumerate, parse_group
from groups.sampling import SamplerSpec, random_element
from scales import parse_scale
from scales.report import Verdict
from utils.errors import DomainError, UnsupportedOperationError


class TestAdjointMatrices(unittest.TestCase):
    """
    Test cases for the closed-form adjoint representations.
    """

    def setUp(self):
        """
        Set up test environment before each test.
        """
        self.axb = parse_group("axb")

    def test_axb_closed_form(self):
        """
        Test Ad on ax+b at (log 2, 3).
        """
        g = self.axb.canonical_form((math.log(2), 3.0))
        np.testing.assert_allclose(ad_matrix(self.axb, g), [[1.0, 0.0], [-3.0, 2.0]])

    def test_axb_is_a_homomorphism(self):
        """
        Test Ad_{gh} = Ad_g Ad_h on ax+b.
        """
        g = self.axb.canonical_form((0.5, -1.0))
        h = self.axb.canonical_form((-0.3, 2.0))
        np.testing.assert_allclose(ad_matrix(self.axb, self.axb.multiply(g, h)),
                                   ad_matrix(self.axb, g) @ ad_matrix(self.axb, h), atol=1e-12)

    def test_homomorphism_defects(self):
        """
        Test the homomorphism property on sampled Heisenberg and SL(2) pairs.
        """
        self.assertLess(homomorphism_defect(parse_group("heis:r")), 1e-9)
        self.assertLess(homomorphism_defect(parse_group("sl2")), 1e-9)
        self.assertLess(homomorphism_defect(parse_group("gl:2")), 1e-9)

    def test_closed_form_matches_finite_differences(self):
        """
        Test ad_matrix against the numerical derivative of conjugation.
        """
        self.assertLess(closed_form_defect(self.axb, samples=20), 1e-6)
        self.assertLess(closed_form_defect(parse_group("sl2"), samples=20), 1e-6)
        g = self.axb.canonical_form((0.2, 0.7))
        np.testing.assert_allclose(ad_numeric(self.axb, g), ad_matrix(self.axb, g), atol=1e-6)

    def test_heisenberg_closed_form(self):
        """
        Test the Heisenberg Ad matrix against finite differences on 100 samples.
        """
        heis = parse_group("heis:r")
        g = heis.canonical_form((2.0, 5.0, -3.0))
        np.testing.assert_allclose(ad_matrix(heis, g), [[1.0, 0.0, 0.0], [2.0, 1.0, 3.0], [0.0, 0.0, 1.0]])
        self.assertLess(closed_form_defect(heis, samples=100), 1e-5)
        self.assertLess(closed_form_defect(self.axb, samples=100), 1e-5)
        self.assertLess(closed_form_defect(parse_group("sl2"), samples=100), 1e-5)

    def test_axb_determinant(self):
        """
        Test det Ad_g = e^a on sampled ax+b elements.
        """
        rng = np.random.default_rng(5)
        for a, b in zip(rng.uniform(-5, 5, size=100), rng.uniform(-100, 100, size=100)):
            g = self.axb.canonical_form((float(a), float(b)))
            self.assertAlmostEqual(np.linalg.det(ad_matrix(self.axb, g)) / math.exp(a), 1.0, places=9)

    def test_adjoint_rep(self):
        """
        Test the basis labels of Ad and that Ad of the identity is the identity matrix.
        """
        rep = adjoint_rep(parse_group("heis:r"))
        self.assertEqual(rep.dim, 3)
        self.assertEqual(rep.labels, ("e23", "e13", "e12"))
        np.testing.assert_array_equal(rep(rep.group.identity()), np.eye(3))
        sl2 = adjoint_rep(parse_group("sl2"))
        np.testing.assert_allclose(sl2(sl2.group.identity()), np.eye(3))
        g = sl2.group.parse_element("2,0,0,0.5")
        np.testing.assert_allclose(sl2(g), np.diag([1.0, 0.25, 4.0]))

    def test_unsupported_groups(self):
        """
        Test that groups without an adjoint representation are refused.
        """
        z = parse_group("z")
        with self.assertRaises(UnsupportedOperationError):
            ad_matrix(z, z.identity())
        with self.assertRaises(DomainError):
            ad_numeric(self.axb, self.axb.identity(), h=0.5)


class TestAdjointProbes(unittest.TestCase):
    """
    Test cases for bounds-Ad, Type R and the unipotent entry bound.
    """

    def setUp(self):
        """
        Set up test environment before each test.
        """
        self.axb = parse_group("axb")
        self.sl2 = parse_group("sl2")

    def test_type_r(self):
        """
        Test Type R on ax+b, SL(2) and the Heisenberg group.
        """
        report = type_r_probe(self.axb, SamplerSpec(self.axb, 20))
        self.assertEqual(report.verdict, Verdict.VIOLATED)
        self.assertAlmostEqual(report.witness["modulus"], math.e)

        report = type_r_probe(self.sl2, SamplerSpec(self.sl2, 20))
        self.assertEqual(report.verdict, Verdict.VIOLATED)
        self.assertAlmostEqual(report.witness["modulus"], 4.0)

        heis = parse_group("heis")
        report = type_r_probe(heis, SamplerSpec(heis, 50))
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertGreater(report.evidence["examined"], 50)

    def test_bounds_ad_needs_samples(self):
        """
        Test that fewer than 50 samples is inconclusive.
        """
        report = bounds_ad_probe(parse_scale("const:1", self.axb), SamplerSpec(self.axb, 10))
        self.assertEqual(report.verdict, Verdict.INCONCLUSIVE)

    def test_constant_does_not_bound_ad(self):
        """
        Test that a constant weight cannot bound Ad on ax+b.
        """
        report = bounds_ad_probe(parse_scale("const:1", self.axb), SamplerSpec(self.axb, 100))
        self.assertEqual(report.verdict, Verdict.VIOLATED)

    def test_theta_bounds_ad_quadratically(self):
        """
        Test ‖Ad_g‖ ≤ C·θ(g)² on SL(2).
        """
        report = bounds_ad_probe(parse_scale("gl_theta", self.sl2), SamplerSpec(self.sl2, 100))
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(report.constants["p"], 2)

    def test_gl_adjoint_checks_at_default_levels(self):
        """
        Test bounds-Ad and Type R on GL(2) over every default sampling level.
        """
        gl2 = parse_group("gl:2")
        report = bounds_ad_probe(parse_scale("gl_theta", gl2), SamplerSpec(gl2, 200))
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(report.constants["p"], 2)
        self.assertEqual(report.evidence["skipped"], 0)

        report = type_r_probe(gl2, SamplerSpec(gl2, 200))
        self.assertEqual(report.verdict, Verdict.VIOLATED)
        self.assertAlmostEqual(report.witness["modulus"], 4.0)

    def test_sampler_group_must_match(self):
        """
        Test that a sampler on another group is refused.
        """
        with self.assertRaises(DomainError):
            bounds_ad_probe(parse_scale("gl_theta", self.sl2), SamplerSpec(self.axb, 100))

    def test_unipotent_entry_bound(self):
        """
        Test that entries of unip:3 grow quadratically in the word length.
        """
        unip = parse_group("unip:3")
        report = unipotent_norm_bound(3, ball_enumerate(unip, None, 10))
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertEqual(report.constants["k"], 2)
        coefficients = report.constants["coefficients"]
        self.assertEqual(len(coefficients), 4)
        self.assertTrue(all(c >= 0 for c in coefficients))
        maxima = report.evidence["max_entry_by_shell"]
        for n, top in enumerate(maxima):
            self.assertGreaterEqual(sum(c * n ** i for i, c in enumerate(coefficients)), top - 1e-9)

    def test_unipotent_bound_checks_group(self):
        """
        Test that the ball must belong to unip:q.
        """
        with self.assertRaises(DomainError):
            unipotent_norm_bound(4, ball_enumerate(parse_group("unip:3"), None, 2))


class TestExplicitWeights(unittest.TestCase):
    """
    Test cases for the SL(2) scales and the ax+b word decomposition.
    """

    def setUp(self):
        """
        Set up test environment before each test.
        """
        self.sl2 = parse_group("sl2")

    def test_sl2_scales(self):
        """
        Test σ = log 2 and θ = 2 at diag(2, 1/2).
        """
        sigma, theta = sl2_scales(self.sl2.parse_element("2,0,0,0.5"))
        self.assertAlmostEqual(sigma, math.log(2))
        self.assertAlmostEqual(theta, 2.0)

    def test_axb_decompose_translation(self):
        """
        Test the word for the pure translation (0, 5).
        """
        cert = axb_decompose((0.0, 5.0))
        self.assertEqual(cert.n, 3)
        self.assertEqual(cert.n_total, 6)
        self.assertAlmostEqual(cert.gamma, 5.0 / (1 + math.e + math.e ** 2))
        self.assertTrue(cert.reconstructed)
        self.assertTrue(cert.inequality_holds)
        self.assertEqual(len(cert.word), 6)

    def test_axb_decompose_with_dilation(self):
        """
        Test that dilations add ⌈|a|⌉ letters and the word still multiplies back.
        """
        cert = axb_decompose((-2.5, 3.0))
        self.assertEqual(cert.a_steps, 3)
        self.assertEqual(cert.n_total, 3 + 2 * cert.n)
        self.assertTrue(cert.reconstructed)
        self.assertTrue(cert.inequality_holds)
        for s, t in cert.word:
            self.assertLessEqual(abs(s), 1.0)
            self.assertLessEqual(abs(t), 1.0)

    def test_sl2_exp_sigma_is_theta(self):
        """
        Test e^σ = θ on 100 sampled elements of SL(2).
        """
        rng = np.random.default_rng(9)
        for _ in range(100):
            sigma, theta = sl2_scales(random_element(self.sl2, rng, 3.0))
            self.assertAlmostEqual(math.exp(sigma) / theta, 1.0, places=9)

    def test_axb_decompose_on_samples(self):
        """
        Test the word certificate on 100 elements of [−5, 5] × [−100, 100].
        """
        rng = np.random.default_rng(13)
        for a, b in zip(rng.uniform(-5, 5, size=100), rng.uniform(-100, 100, size=100)):
            cert = axb_decompose((float(a), float(b)))
            self.assertTrue(cert.reconstructed, cert.to_dict())
            self.assertTrue(cert.inequality_holds, cert.to_dict())
            self.assertEqual(cert.a_steps, math.ceil(abs(a)))


if __name__ == "__main__":
    unittest.main()
