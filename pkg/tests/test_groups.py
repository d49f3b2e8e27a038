"""
Tests for the groups package.
"""
import unittest

import numpy as np

import config
from groups import ball_enumerate, evaluate_word, parse_generators, parse_group, word_gauge
from groups.sampling import SamplerSpec, draw
from utils.errors import CanonicalFormError, DomainError, GeneratorIndexError, GroupSpecError


class TestGroupKinds(unittest.TestCase):
    """
    Test cases for group parsing and the group laws.
    """

    def setUp(self):
        """
        Set up test environment before each test.
        """
        self.z2 = parse_group("z:2")
        self.heis = parse_group("heis")
        self.free = parse_group("free:2")

    def test_parse_group_specs(self):
        """
        Test that group specs round-trip through their spec strings.
        """
        self.assertEqual(self.z2.spec, "z:2")
        self.assertEqual(parse_group("z").spec, "z")
        self.assertEqual(parse_group("gl:3").spec, "gl:3")
        self.assertEqual(parse_group("unip:4").spec, "unip:4")
        self.assertFalse(parse_group("axb").discrete)
        self.assertTrue(self.heis.discrete)

    def test_parse_group_rejects_unknown(self):
        """
        Test that malformed group specs raise GroupSpecError.
        """
        for text in ("bogus", "free", "z:0", "heis:q"):
            with self.assertRaises(GroupSpecError):
                parse_group(text)

    def test_heisenberg_law(self):
        """
        Test the Heisenberg product and inverse.
        """
        x = self.heis.parse_element("1,0,0")
        z = self.heis.parse_element("0,0,1")

        # x·z picks up the central coordinate a·c'
        self.assertEqual(self.heis.multiply(x, z).payload, (1, 1, 1))
        self.assertEqual(self.heis.multiply(z, x).payload, (1, 0, 1))

        g = self.heis.parse_element("2,-3,5")
        self.assertEqual(self.heis.multiply(g, self.heis.inverse(g)), self.heis.identity())

    def test_free_group_reduction(self):
        """
        Test that free group words are freely reduced.
        """
        self.assertEqual(self.free.format_element(self.free.parse_element("aA")), "1")
        self.assertEqual(self.free.format_element(self.free.parse_element("abBa")), "aa")
        self.assertEqual(self.free.word_length(self.free.parse_element("abAB")), 4)
        with self.assertRaises(GroupSpecError):
            self.free.parse_element("ac")

    def test_canonical_form_checks(self):
        """
        Test that raw data without a canonical form is rejected.
        """
        sl2 = parse_group("sl2")
        with self.assertRaises(CanonicalFormError):
            sl2.parse_element("2,0,0,1")
        unip = parse_group("unip:3")
        g = unip.parse_element("1,2,3")
        self.assertEqual(unip.upper_entries(g), [1, 2, 3])
        with self.assertRaises(CanonicalFormError):
            unip.canonical_form([1, 1, 0, 0, 2, 0, 0, 0, 1])

    def test_evaluate_word(self):
        """
        Test evaluating words in the declared generators.
        """
        g = evaluate_word(self.z2, [1, 2, -1, 2])
        self.assertEqual(g.payload, (0, 2))
        with self.assertRaises(GeneratorIndexError):
            evaluate_word(self.z2, [3])

    def test_inline_generators_are_symmetrized(self):
        """
        Test that inline generating sets are closed under inverses.
        """
        gens = parse_generators(parse_group("z"), "2;3")
        self.assertEqual(len(gens), 4)
        self.assertTrue(gens.symmetric)
        self.assertFalse(gens.standard)


class TestBallEnumeration(unittest.TestCase):
    """
    Test cases for ball enumeration and word lengths.
    """

    def setUp(self):
        """
        Set up test environment before each test.
        """
        self.z2 = parse_group("z:2")
        self.free = parse_group("free:2")

    def test_lattice_ball_sizes(self):
        """
        Test shell and ball sizes of Z^2.
        """
        table = ball_enumerate(self.z2, None, 3)
        self.assertEqual(table.sphere_sizes, [1, 4, 8, 12])
        self.assertEqual(table.ball_sizes, [1, 5, 13, 25])
        self.assertFalse(table.truncated)

    def test_free_group_ball_sizes(self):
        """
        Test shell and ball sizes of the free group on two letters.
        """
        table = ball_enumerate(self.free, None, 3)
        self.assertEqual(table.sphere_sizes, [1, 4, 12, 36])
        self.assertEqual(table.ball_sizes, [1, 5, 17, 53])

    def test_heisenberg_generators(self):
        """
        Test that the standard Heisenberg generators are x and z with inverses.
        """
        heis = parse_group("heis")
        table = ball_enumerate(heis, None, 1)
        self.assertEqual(table.ball_sizes[1], 5)

    def test_cap_keeps_complete_shells(self):
        """
        Test that the cap truncates at the last complete shell.
        """
        table = ball_enumerate(self.z2, None, 5, cap=10)
        self.assertTrue(table.truncated)
        self.assertEqual(table.radius, 1)
        self.assertEqual(table.requested_radius, 5)
        self.assertEqual(table.ball_sizes, [1, 5])

    def test_word_gauge_and_geodesic(self):
        """
        Test word lengths and geodesic words from the enumeration.
        """
        table = ball_enumerate(self.z2, None, 5)
        g = self.z2.parse_element("2,-1")
        self.assertEqual(word_gauge(table, g), 3)
        word = table.geodesic_word(g)
        self.assertEqual(len(word), 3)
        product = self.z2.product(table.generators[i - 1] for i in word)
        self.assertEqual(product, g)

        # Outside the ball
        far = self.z2.parse_element("6,0")
        self.assertIsNone(word_gauge(table, far))
        with self.assertRaises(DomainError):
            table.geodesic_word(far)

    def test_custom_generators_change_lengths(self):
        """
        Test word lengths with the generating set {±2, ±3} of Z.
        """
        z = parse_group("z")
        table = ball_enumerate(z, parse_generators(z, "2;3"), 3)
        self.assertEqual(word_gauge(table, z.parse_element("1")), 2)
        self.assertEqual(word_gauge(table, z.parse_element("5")), 2)
        self.assertEqual(table.ball_sizes[1], 5)

    def test_continuous_groups_cannot_be_enumerated(self):
        """
        Test that ball enumeration refuses continuous groups.
        """
        from utils.errors import UnsupportedOperationError
        with self.assertRaises(UnsupportedOperationError):
            ball_enumerate(parse_group("axb"), None, 2)


class TestSampling(unittest.TestCase):
    """
    Test cases for seeded sampling.
    """

    def setUp(self):
        """
        Set up test environment before each test.
        """
        self.axb = parse_group("axb")

    def test_draw_is_reproducible(self):
        """
        Test that the same seed draws the same elements.
        """
        first = draw(SamplerSpec(self.axb, 40, seed=7))
        second = draw(SamplerSpec(self.axb, 40, seed=7))
        self.assertEqual(first, second)
        levels = {level for level, _ in first}
        self.assertEqual(levels, set(range(SamplerSpec(self.axb, 40).levels)))

    def test_draw_rejects_bad_sample_counts(self):
        """
        Test the sample count range.
        """
        with self.assertRaises(DomainError):
            draw(SamplerSpec(self.axb, 0))

    def test_gl_draw_at_default_levels(self):
        """
        Test that GL(n) samples stay invertible up to the top default level.
        """
        for n in (2, 3):
            group = parse_group(f"gl:{n}")
            spec = SamplerSpec(group, 200)
            self.assertGreater(spec.magnitude(spec.levels - 1), config.SAMPLER_GL_LOG_SPREAD)
            drawn = draw(spec)
            self.assertGreater(len(drawn), 200)
            for _, g in drawn:
                sign, _ = np.linalg.slogdet(group.matrix(g))
                self.assertNotEqual(sign, 0)


if __name__ == "__main__":
    unittest.main()
