#pylint: disable-all

'''Tests for the time-frequency lattices and the translate sweeps.'''
import numpy as np

from django.test import SimpleTestCase

from gaussampling.gabor.lattices import (GaborLatticeSpec, build_delta_lattice,
                                         density_conditions, isotropic_reduction, lattice_points)
from gaussampling.gabor.sweeps import (frame_verdict_trend, translate_estimate, translate_grid,
                                       translate_sweep)
from gaussampling.point_sets.descriptors import Progression
from gaussampling.point_sets.slanted import SlantedConfig, build_slanted
from gaussampling.tests.basetests import make_rng
from gaussampling.utils.exceptions import InvalidParameterError

INTEGERS = SlantedConfig(1, 0, Progression(1.0), Progression(1.0))


def sort_rows(points):
    return points[np.lexsort(points.T[::-1])]


class GaborLatticeSpecTest(SimpleTestCase):

    def test_square_time_plane(self):
        spec = GaborLatticeSpec.delta(1, 0, 1.0, 1.0, 0.9, 0.9)
        points = build_delta_lattice(spec, ((-2, 2), (-2, 2), (-1, 1), (-1, 1)))
        self.assertEqual(points.shape, (225, 4))
        ticks = 0.9 * np.arange(-2, 3)
        xx, yy = np.meshgrid(ticks, ticks, indexing='ij')
        expected = np.column_stack((xx.ravel(), yy.ravel()))
        time_points = np.unique(np.round(points[:, :2], 12), axis=0)
        self.assertTrue(np.allclose(sort_rows(time_points), sort_rows(expected)))
        modulations = np.unique(points[:, 2:], axis=0)
        self.assertEqual(len(modulations), 9)
        self.assertEqual(np.abs(modulations).max(), 1.0)

    def test_generators_carry_sigma(self):
        spec = GaborLatticeSpec.delta(3, 4, 2.0, 0.5, 0.8, 0.6)
        generators = spec.time_generators()
        self.assertAlmostEqual(generators[0, 0], 3 * 0.8 / (2.0 * 25), places=15)
        self.assertAlmostEqual(generators[1, 0], 4 * 0.8 / (0.5 * 25), places=15)
        self.assertAlmostEqual(generators[0, 1], -4 * 0.6 / 2.0, places=15)
        self.assertAlmostEqual(generators[1, 1], 3 * 0.6 / 0.5, places=15)
        self.assertEqual(spec.sigma, 5.0)
        self.assertAlmostEqual(spec.beta, np.pi * 0.25 / 4.0, places=15)

    def test_volume(self):
        rng = make_rng(50)
        pairs = [(1, 0), (1, 1), (1, 2), (3, 4), (2, -5)]
        for _ in range(10):
            p, q = pairs[rng.integers(len(pairs))]
            a, b, c, d = rng.uniform(0.2, 3.0, 4)
            spec = GaborLatticeSpec.delta(p, q, a, b, c, d)
            self.assertTrue(abs(spec.volume() - c * d) <= 1e-12 * max(1.0, c * d))

    def test_generator_text(self):
        lines = GaborLatticeSpec.delta(1, 1, 1.0, 1.0, 0.9, 0.9).format_generators().splitlines()
        self.assertEqual(len(lines), 4)
        self.assertEqual(lines[2].split(), ['0.0', '0.0', '1.0', '0.0'])

    def test_invalid(self):
        with self.assertRaisesRegex(InvalidParameterError, '^c must be positive'):
            GaborLatticeSpec.delta(1, 1, 1.0, 1.0, 0.0, 0.9)
        with self.assertRaises(InvalidParameterError):
            GaborLatticeSpec.delta(2, 4, 1.0, 1.0, 0.9, 0.9)
        with self.assertRaises(InvalidParameterError):
            GaborLatticeSpec('hexagonal', 1.0)
        with self.assertRaises(InvalidParameterError):
            GaborLatticeSpec.product('1 1')

    def test_product_generators(self):
        config = SlantedConfig(1, 2, Progression(1.5), Progression(0.4))
        spec = GaborLatticeSpec.product(config, 1.0)
        window = ((-3.07, 2.93), (-2.11, 3.13))
        from_generators = lattice_points(spec.time_generators(), window)
        self.assertTrue(np.allclose(from_generators, sort_rows(build_slanted(config, window))))
        with self.assertRaises(InvalidParameterError):
            GaborLatticeSpec.product(SlantedConfig(1, 2, Progression(1.5, 0.1),
                                                   Progression(0.4))).time_generators()


class LatticePointsTest(SimpleTestCase):
    window = ((-3.07, 2.93), (-2.11, 3.13))

    def test_matches_slanted_construction(self):
        spec = GaborLatticeSpec.delta(3, 4, 1.3, 0.7, 0.8, 0.6)
        built = build_delta_lattice(spec, self.window + ((-0.5, 0.5), (-0.5, 0.5)))
        self.assertTrue(np.all(built[:, 2:] == 0))
        expected = lattice_points(spec.time_generators(), self.window)
        self.assertTrue(len(expected) > 10)
        self.assertEqual(built.shape[0], expected.shape[0])
        self.assertTrue(np.allclose(sort_rows(built[:, :2]), expected, atol=1e-12))

    def test_generator_order(self):
        spec = GaborLatticeSpec.delta(1, 2, 1.1, 0.9, 0.7, 0.5)
        window4d = self.window + ((-2.5, 2.5), (-1.5, 1.5))
        generators = spec.generator_matrix()
        first = lattice_points(generators, window4d)
        swapped = lattice_points(generators[:, [1, 0, 3, 2]], window4d)
        self.assertEqual(first.shape, swapped.shape)
        self.assertTrue(np.allclose(first, swapped, atol=1e-12))
        built = build_delta_lattice(spec, window4d)
        self.assertTrue(np.allclose(sort_rows(built), first, atol=1e-12))

    def test_dependent_generators(self):
        with self.assertRaises(InvalidParameterError):
            lattice_points([[1.0, 2.0], [2.0, 4.0]], self.window)


class ReductionTest(SimpleTestCase):

    def test_dilation(self):
        spec = GaborLatticeSpec.delta(1, 2, 1.5, 0.5, 0.8, 0.3, alpha=2.0)
        shape, config = isotropic_reduction(spec)
        self.assertAlmostEqual(shape, 2.0 / 2.25, places=15)
        self.assertEqual((config.gamma1, config.gamma2), (Progression(0.8), Progression(0.3)))
        window = np.array([[-2.03, 1.97], [-3.01, 2.99]])
        squeeze = np.array([1.5, 0.5])
        stretched = build_slanted(config, window * squeeze[:, None]) / squeeze
        self.assertTrue(np.allclose(sort_rows(stretched),
                                    lattice_points(spec.time_generators(), window), atol=1e-12))

    def test_products_are_unchanged(self):
        spec = GaborLatticeSpec.product(INTEGERS, 2.0)
        self.assertEqual(isotropic_reduction(spec), (2.0, INTEGERS))

    def test_density_conditions(self):
        first = density_conditions(GaborLatticeSpec.delta(1, 1, 1.0, 1.0, 0.9, 0.9))
        self.assertTrue(first['condition_i'] and first['sufficient'] and first['necessary'])
        second = density_conditions(GaborLatticeSpec.delta(1, 2, 1.0, 1.0, 4.0, 0.19))
        self.assertFalse(second['condition_i'])
        self.assertTrue(second['condition_ii'] and second['necessary'])
        third = density_conditions(GaborLatticeSpec.delta(1, 1, 1.0, 1.0, 1.2, 1.2))
        self.assertFalse(third['sufficient'] or third['necessary'])
        self.assertAlmostEqual(third['D1'], 1 / 1.2, places=12)


class TranslateGridTest(SimpleTestCase):

    def test_endpoints(self):
        grid = translate_grid(0.25)
        self.assertEqual(grid.shape, (25, 2))
        self.assertEqual(tuple(grid[0]), (0.0, 0.0))
        self.assertEqual(tuple(grid[-1]), (1.0, 1.0))
        self.assertEqual(len(translate_grid(0.1)), 121)

    def test_refinement_keeps_translates(self):
        coarse = {tuple(row) for row in translate_grid(0.2)}
        fine = {tuple(row) for row in translate_grid(0.1)}
        self.assertTrue(coarse <= fine)

    def test_step_range(self):
        with self.assertRaises(InvalidParameterError):
            translate_grid(0.5)
        with self.assertRaises(InvalidParameterError):
            translate_grid(0.0)


class TranslateSweepTest(SimpleTestCase):

    def test_integer_lattice(self):
        report = translate_sweep(INTEGERS, np.pi, 0.25, 20)
        self.assertTrue(report.A_est > 0)
        self.assertTrue(np.all(report.lower >= report.A_est))
        self.assertEqual(report.argmin, tuple(report.translates[np.argmin(report.lower)]))
        self.assertIn('no failing translate found at step 0.25', report.summary())
        self.assertEqual(len(report.rows()), 25)

    def test_unit_periodicity(self):
        first = translate_estimate(INTEGERS, np.pi, (0.3, 0.2), 10)
        second = translate_estimate(INTEGERS, np.pi, (1.3, 0.2), 10)
        self.assertTrue(abs(first.A_est / second.A_est - 1.0) <= 1e-6)

    def test_refined_minimum(self):
        config = SlantedConfig(1, 1, Progression(0.9), Progression(0.9))
        coarse = translate_sweep(config, np.pi, 0.25, 10)
        fine = translate_sweep(config, np.pi, 0.125, 10, threads=3)
        self.assertTrue(fine.A_est <= coarse.A_est + 1e-10)
        lookup = {tuple(t): value for t, value in zip(fine.translates, fine.lower)}
        for translate, value in zip(coarse.translates, coarse.lower):
            self.assertTrue(abs(lookup[tuple(translate)] - value) <= 1e-10 * coarse.B_est)

    def test_invalid_threads(self):
        with self.assertRaises(InvalidParameterError):
            translate_sweep(INTEGERS, np.pi, 0.25, 10, threads=-1)


class FrameVerdictTrendTest(SimpleTestCase):

    def test_square_condition(self):
        spec = GaborLatticeSpec.delta(1, 1, 1.0, 1.0, 0.9, 0.9)
        result = frame_verdict_trend(spec, [10, 20], step=0.25, threads=2)
        self.assertEqual([n for n, _ in result.rows()], [10, 20])
        self.assertTrue(result.trend.spread <= 2.0)
        self.assertEqual(result.shape, np.pi)

    def test_slanted_condition(self):
        spec = GaborLatticeSpec.delta(1, 2, 1.0, 1.0, 4.0, 0.19)
        result = frame_verdict_trend(spec, [10, 20], step=0.25, threads=2)
        self.assertTrue(result.trend.spread <= 2.0)

    def test_sparse_lattice_decays(self):
        spec = GaborLatticeSpec.delta(1, 1, 1.0, 1.0, 1.2, 1.2)
        result = frame_verdict_trend(spec, [10, 20, 40], step=0.25, threads=4)
        self.assertTrue(result.trend.decay >= 10)
