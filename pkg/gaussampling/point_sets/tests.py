#pylint: disable-all

'''Tests for point set descriptors, densities and slanted configurations.'''
import math
import os
import tempfile

import numpy as np
from scipy.spatial import cKDTree

from django.test import SimpleTestCase

from gaussampling.point_sets.density import (beurling_density, counting_bounds,
                                             planar_density, separation)
from gaussampling.point_sets.descriptors import (Affine, Empty, Explicit, Perturbation,
                                                 Progression, Puncture, Union, affine)
from gaussampling.point_sets.parsing import parse_descriptor
from gaussampling.point_sets.slanted import (LineFamily, SlantedConfig,
                                             alternative_representation, build_slanted,
                                             density_regime, enclosing_lines,
                                             reflect_translate, translate)
from gaussampling.tests.basetests import create_point_sets, make_rng
from gaussampling.utils.exceptions import (DescriptorParseError, InvalidParameterError,
                                           UndefinedSeparationError)

WINDOW = ((-10.0123, 9.9871), (-9.9937, 10.0419))


def same_points(testcase, first, second, tol=1e-10):
    '''Both arrays hold the same planar points up to `tol`.'''
    testcase.assertEqual(len(first), len(second))
    if len(first) == 0:
        return
    distance, _ = cKDTree(second).query(first)
    testcase.assertTrue(distance.max() <= tol, "points differ by %.3e" % distance.max())


class DescriptorTest(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        create_point_sets(cls)

    def test_progression_points(self):
        points = Progression(0.5, 0.25).points((-1, 1))
        self.assertEqual(points.tolist(), [-0.75, -0.25, 0.25, 0.75])

    def test_windows_are_consistent(self):
        sets = [self.integers, self.punctured, Perturbation.random(Progression(1.0), 0.2, 5, 1),
                Union((self.even, Progression(2.0, 0.5)))]
        for point_set in sets:
            outer = point_set.points((-20, 20))
            inner = point_set.points((-7.3, 4.1))
            clipped = outer[(outer >= -7.3) & (outer <= 4.1)]
            self.assertTrue(np.array_equal(inner, clipped))

    def test_puncture_removes_points(self):
        points = self.punctured.points((-2, 2))
        self.assertEqual(points.tolist(), [-2.0, -1.0, 1.0, 2.0])

    def test_perturbation_needs_small_offsets(self):
        with self.assertRaises(InvalidParameterError):
            Perturbation(Progression(1.0), (0.5,))
        with self.assertRaises(InvalidParameterError):
            Perturbation(Explicit((0.0,)), (0.1,))

    def test_perturbation_offsets_are_cyclic(self):
        points = Perturbation(Progression(1.0), (0.1, -0.1)).points((-0.5, 3.5))
        self.assertTrue(np.allclose(points, [0.1, 0.9, 2.1, 2.9]))

    def test_affine_simplifies_progressions(self):
        self.assertEqual(affine(self.integers, -2.0, 0.5), Progression(2.0, 0.5))
        self.assertEqual(affine(Empty(), 3.0, 1.0), Empty())
        perturbed = affine(Perturbation(Progression(1.0), (0.1,)), 2.0, 1.0)
        self.assertIsInstance(perturbed, Affine)
        self.assertTrue(np.allclose(perturbed.points((0.5, 5.5)), [1.2, 3.2, 5.2]))


class SeparationTest(SimpleTestCase):

    def test_integers(self):
        self.assertEqual(separation(Progression(1.0), (-10, 10)), 1.0)

    def test_interleaved_progressions(self):
        union = Union((Progression(2.0), Progression(2.0, 0.5)))
        self.assertEqual(separation(union, (-10, 10)), 0.5)
        self.assertEqual(union.delta, 0.5)

    def test_perturbation_by_enumeration(self):
        perturbed = Perturbation.random(Progression(1.0), 0.2, 11, 42)
        measured = separation(perturbed, (-50, 50))
        points = perturbed.points((-50, 50))
        self.assertEqual(measured, np.min(np.diff(points)))
        self.assertTrue(0.6 <= measured <= 1.4)
        self.assertTrue(measured >= perturbed.delta)

    def test_too_few_points(self):
        with self.assertRaises(UndefinedSeparationError):
            separation(Explicit((1.0,)), (-10, 10))
        with self.assertRaises(UndefinedSeparationError):
            separation(Progression(5.0), (1, 4))


class DensityTest(SimpleTestCase):

    def test_progression_is_exact(self):
        estimate = beurling_density(Progression(0.9))
        self.assertTrue(estimate.exact)
        self.assertAlmostEqual(estimate.lower, 1 / 0.9)
        self.assertAlmostEqual(estimate.upper, 1 / 0.9)
        self.assertEqual(beurling_density(Progression(2.0)).lower, 0.5)

    def test_puncture_keeps_density(self):
        estimate = beurling_density(Puncture(Progression(1.0), (0.0,)))
        self.assertTrue(estimate.exact)
        self.assertEqual(estimate.lower, 1.0)
        last = estimate.table[-1]
        self.assertEqual(last.radius, 200.0)
        self.assertTrue(0.99 <= last.lower <= 1.0)

    def test_windowed_estimates_scale(self):
        union = Union((Progression(2.0), Progression(2.0, 0.5)))
        base = beurling_density(union)
        self.assertFalse(base.exact)
        stretched = beurling_density(affine(union, 1.5, 0.0))
        self.assertTrue(abs(stretched.lower * 1.5 / base.lower - 1) < 0.02)
        self.assertTrue(abs(stretched.upper * 1.5 / base.upper - 1) < 0.02)

    def test_finite_sets_have_zero_density(self):
        estimate = beurling_density(Explicit(tuple(range(-5, 6))), radii=[25, 50])
        self.assertEqual([row.radius for row in estimate.table], [25.0, 50.0])
        self.assertEqual(estimate.lower, 0.0)

    def test_counting_bounds(self):
        bound = counting_bounds(Progression(2.0, 0.3))
        self.assertTrue(abs(bound.rho - 0.5) < 0.01)
        radii = np.linspace(0.01, 200, 5000)
        points = Progression(2.0, 0.3).points((-200, 200))
        ahead = np.array([np.count_nonzero((points >= 0) & (points < r)) for r in radii])
        behind = np.array([np.count_nonzero((points < 0) & (points > -r)) for r in radii])
        self.assertTrue(np.all(np.maximum(ahead, behind) <= bound.rho * radii + bound.K + 1e-9))

    def test_counting_bounds_of_empty_set(self):
        bound = counting_bounds(Empty())
        self.assertEqual((bound.rho, bound.K), (0.0, 0.0))


class SlantedTest(SimpleTestCase):

    def test_non_coprime_rejected(self):
        with self.assertRaises(InvalidParameterError):
            SlantedConfig(2, 4, Progression(1.0), Progression(1.0))
        with self.assertRaises(InvalidParameterError):
            SlantedConfig(0, 0, Progression(1.0), Progression(1.0))

    def test_axis_aligned_is_a_product(self):
        config = SlantedConfig(1, 0, Progression(0.9), Progression(0.8))
        points = build_slanted(config, ((-3, 3), (-2, 2)))
        xs = Progression(0.9).points((-3, 3))
        ys = Progression(0.8).points((-2, 2))
        product = np.array([(x, y) for x in xs for y in ys])
        self.assertTrue(np.array_equal(points, product))

    def test_sigma(self):
        config = SlantedConfig(3, 4, Progression(1.0), Progression(1.0))
        self.assertEqual(config.sigma, 5.0)
        self.assertEqual(config.sigma_squared, 25)

    def test_inversion_identities(self):
        config = SlantedConfig(3, 4, Progression(0.7, 0.1), Progression(0.3, -0.05))
        points = build_slanted(config, WINDOW)
        chosen = points[make_rng(10).choice(len(points), 100, replace=False)]
        gamma = config.coordinates(chosen)
        k1 = np.rint((gamma[:, 0] - 0.1) / 0.7)
        k2 = np.rint((gamma[:, 1] + 0.05) / 0.3)
        self.assertTrue(np.max(np.abs(gamma[:, 0] - (0.1 + 0.7 * k1))) <= 1e-12)
        self.assertTrue(np.max(np.abs(gamma[:, 1] - (-0.05 + 0.3 * k2))) <= 1e-12)

    def test_rotation_preserves_density(self):
        config = SlantedConfig(1, 1, Progression(0.9), Progression(0.8))
        points = build_slanted(config, ((-101, 101), (-101, 101)))
        expected = (config.sigma / 0.9) * (1 / (0.8 * config.sigma))
        self.assertTrue(abs(planar_density(points, (0, 0), 100) / expected - 1) < 0.05)

    def test_alternative_representation(self):
        for p, q, g1, g2 in ((1, 0, 1.0, 1.0), (1, 1, 0.9, 0.8), (3, -4, 1.1, 0.35)):
            config = SlantedConfig(p, q, Progression(g1), Progression(g2, 0.1))
            swapped = alternative_representation(config)
            original = build_slanted(config, WINDOW)
            self.assertTrue(len(original) > 0)
            same_points(self, build_slanted(swapped, WINDOW), original)
            twice = alternative_representation(swapped)
            same_points(self, build_slanted(twice, WINDOW), original)

    def test_translate_1d(self):
        self.assertEqual(translate(Progression(1.0), 0.0), Progression(1.0))
        self.assertEqual(translate(Progression(1.0), 0.5), Progression(1.0, 0.5))

    def test_translate_2d(self):
        config = SlantedConfig(1, 1, Progression(0.9), Progression(0.8))
        shift = np.array([0.3, 0.7])
        moved = build_slanted(translate(config, shift), WINDOW)
        window = np.asarray(WINDOW) - shift[:, None]
        expected = build_slanted(config, window) + shift
        same_points(self, moved, expected, tol=1e-12)
        same_points(self, build_slanted(translate(config, (0, 0)), WINDOW),
                    build_slanted(config, WINDOW), tol=0.0)

    def test_reflect_translate(self):
        config = SlantedConfig(1, 2, Progression(0.9, 0.2), Progression(0.8))
        shift = np.array([0.4, 0.1])
        moved = build_slanted(reflect_translate(config, shift), WINDOW)
        window = -(np.asarray(WINDOW) - shift[:, None])[:, ::-1]
        expected = -build_slanted(config, window) + shift
        same_points(self, moved, expected, tol=1e-12)

    def test_density_regime(self):
        self.assertEqual(density_regime(SlantedConfig(1, 1, Progression(0.9), Progression(0.9))),
                         'sufficient')
        self.assertEqual(density_regime(SlantedConfig(1, 1, Progression(1.2), Progression(1.2))),
                         'necessary-violated')

    def test_enclosing_lines(self):
        config = SlantedConfig(3, 4, Progression(0.7), Progression(0.3))
        family = enclosing_lines(config)
        self.assertEqual(family.sigma, 5.0)
        points = build_slanted(config, WINDOW)
        offsets = family.lines(WINDOW)
        along = points @ family.normal
        nearest = offsets[np.argmin(np.abs(along[:, None] - offsets[None, :]), axis=1)]
        self.assertTrue(np.max(np.abs(along - nearest)) <= 1e-12)


class LineFamilyTest(SimpleTestCase):

    def test_rational_and_irrational(self):
        rational = LineFamily.rational(1, 1, Progression(1.0))
        self.assertAlmostEqual(rational.sigma, math.sqrt(2))
        golden = LineFamily.irrational((1 + math.sqrt(5)) / 2, Progression(4.0))
        self.assertEqual(golden.sigma, math.inf)
        self.assertAlmostEqual(np.linalg.norm(golden.normal), 1.0)

    def test_line_points_lie_on_lines(self):
        family = LineFamily.rational(2, -3, Progression(0.5))
        for gamma in family.lines(((-5, 5), (-5, 5))):
            points = family.line_points(gamma, np.linspace(-4, 4, 17))
            self.assertTrue(family.residuals(points, gamma).max() <= 1e-12)

    def test_invalid_families(self):
        with self.assertRaises(InvalidParameterError):
            LineFamily.rational(2, 2, Progression(1.0))
        with self.assertRaises(InvalidParameterError):
            LineFamily(Progression(1.0), p=1, q=0, slope=0.5)


class ParserTest(SimpleTestCase):

    def test_keywords(self):
        self.assertEqual(parse_descriptor('prog 0.9'), Progression(0.9))
        self.assertEqual(parse_descriptor('prog 2 0.3'), Progression(2.0, 0.3))
        self.assertEqual(parse_descriptor('empty'), Empty())
        self.assertEqual(parse_descriptor('puncture { prog 1 } 0'),
                         Puncture(Progression(1.0), (0.0,)))
        self.assertEqual(parse_descriptor('union { prog 2 ; prog 2 0.5 }'),
                         Union((Progression(2.0), Progression(2.0, 0.5))))
        self.assertEqual(parse_descriptor('perturb { prog 1 } offsets=0.1,-0.2'),
                         Perturbation(Progression(1.0), (0.1, -0.2)))
        self.assertEqual(parse_descriptor('explicit 3 1 2'), Explicit((1.0, 2.0, 3.0)))
        self.assertEqual(parse_descriptor('affine { prog 1 } 2 0.5'), Progression(2.0, 0.5))

    def test_describe_parses_back(self):
        sets = [Progression(0.9, 0.1), Union((Progression(2.0), Explicit((0.5, 1.5)))),
                Puncture(Progression(1.0), (0.0,)), Perturbation(Progression(1.0), (0.1, 0.2)),
                Affine(Perturbation(Progression(1.0), (0.1,)), -1.0, 0.5)]
        for point_set in sets:
            parsed = parse_descriptor(point_set.describe())
            self.assertTrue(np.array_equal(parsed.points((-20, 20)), point_set.points((-20, 20))))

    def test_files(self):
        with tempfile.TemporaryDirectory() as folder:
            with open(os.path.join(folder, 'offsets.tsv'), 'w') as fio:
                fio.write('# offsets\n0.1\t x\n-0.1\t y\n')
            with open(os.path.join(folder, 'pts.tsv'), 'w') as fio:
                fio.write('1.5\n-2.5\n')
            perturbed = parse_descriptor('perturb { prog 1 } file=offsets.tsv', folder)
            self.assertEqual(perturbed.offsets, (0.1, -0.1))
            explicit = parse_descriptor('explicit file=pts.tsv', folder)
            self.assertEqual(explicit.values, (-2.5, 1.5))
            with self.assertRaises(DescriptorParseError):
                parse_descriptor('explicit file=missing.tsv', folder)

    def test_errors_carry_columns(self):
        cases = (('prog x', 6), ('prog 1 2 3', 1), ('union { prog 1 ; }', 18),
                 ('frobnicate 3', 1), ('prog 1 }', 8), ('perturb { prog 1 } 0.1', 20))
        for text, column in cases:
            with self.assertRaises(DescriptorParseError) as ctx:
                parse_descriptor(text)
            self.assertEqual(ctx.exception.column, column, text)
