#pylint: disable-all

'''Tests for the theta comb, the product construction and the planar lifts.'''
import math

import numpy as np

from django.test import SimpleTestCase
from django.test.utils import override_settings

from gaussampling.annihilator_factory.construction import build_annihilator_1d, tail_fraction
from gaussampling.annihilator_factory.laurent import laurent_coeffs, product_g
from gaussampling.annihilator_factory.lifts import (critical_configs, critical_counterexamples,
                                                    lift_to_2d)
from gaussampling.annihilator_factory.theta import alternating_theta
from gaussampling.core_series.grids import CoeffGrid
from gaussampling.core_series.series import GaussSeriesFunction, sup_norm_estimate
from gaussampling.point_sets.descriptors import Empty, Explicit, Progression
from gaussampling.point_sets.slanted import build_slanted
from gaussampling.tests.basetests import make_rng, random_grid
from gaussampling.utils.exceptions import (InfeasibleDensityError, InvalidParameterError,
                                           UnsupportedDomainError)


class AlternatingThetaTest(SimpleTestCase):

    def setUp(self):
        self.comb = alternating_theta(np.pi)
        self.sup = sup_norm_estimate(self.comb, (-3.0, 3.0), 0.05)

    def test_vanishes_on_half_integers(self):
        values = self.comb.eval(np.arange(-5, 6) + 0.5)
        self.assertTrue(np.abs(values).max() <= 1e-10 * self.sup)

    def test_positive_at_zero(self):
        self.assertTrue(self.comb.eval([0.0])[0].real > 0.9)

    def test_antisymmetric_under_unit_shift(self):
        x = make_rng(30).uniform(-3, 3, 100)
        shifted = self.comb.eval(x + 1.0)
        self.assertTrue(np.abs(shifted + self.comb.eval(x)).max() <= 1e-10 * self.sup)

    def test_scaled_comb_keeps_its_zeros(self):
        comb = alternating_theta(1.0, math.sqrt(5.0))
        values = comb.eval(np.arange(-4, 4) + 0.5)
        self.assertTrue(np.abs(values).max() <= 1e-10)

    def test_invalid(self):
        with self.assertRaises(InvalidParameterError):
            alternating_theta(0.0)
        with self.assertRaises(InvalidParameterError):
            alternating_theta(1.0, radius=0)


class ProductTest(SimpleTestCase):

    def test_vanishes_on_the_set(self):
        target = Progression(2.0, 0.3)
        values = product_g(target, 1.0, target.points((-9, 9)))
        self.assertTrue(np.all(np.abs(values) <= 1e-12))

    def test_empty_product(self):
        self.assertEqual(product_g(Empty(), 1.0, 0.7 + 0.2j), 1.0)

    def test_single_factor(self):
        value = product_g(Explicit((0.5,)), 1.0, 0.0)
        self.assertAlmostEqual(value.real, 1.0 - math.exp(-1.0), places=14)

    def test_growth(self):
        a, epsilon = 1.0, 0.25
        x = np.linspace(0.0, 10.0, 201)
        with np.errstate(divide='ignore'):
            logs = np.log(np.abs(product_g(Progression(2.0, 0.3), a, x)))
        excess = logs - a * (1.0 - epsilon) * x * x
        finite = excess[np.isfinite(excess)]
        self.assertTrue(finite.size > 150)
        self.assertTrue(finite.max() < 5.0)

    def test_far_arguments(self):
        with self.assertRaises(UnsupportedDomainError):
            product_g(Progression(2.0), 1.0, 5000.0)


class LaurentTest(SimpleTestCase):

    def test_single_point(self):
        gamma = 0.5
        table = laurent_coeffs(Explicit((gamma,)), 1.0, (-3, 3), 0.5)
        values = table.values
        self.assertAlmostEqual(table.get(0).real, 1.0, places=12)
        self.assertAlmostEqual(table.get(1).real, -math.exp(-2.0 * gamma), places=12)
        others = np.delete(np.abs(values), [3, 4])
        self.assertTrue(others.max() <= 1e-12)

    def test_empty_set(self):
        table = laurent_coeffs(Empty(), 1.0, (-4, 4))
        self.assertAlmostEqual(table.get(0).real, 1.0, places=14)
        self.assertTrue(np.abs(np.delete(table.values, 4)).max() <= 1e-14)
        self.assertEqual(table.epsilon, 0.5)

    def test_decay(self):
        a, epsilon = 1.0, 0.25
        table = laurent_coeffs(Progression(2.0, 0.3), a, (-12, 12), epsilon)
        slope, intercept = table.decay_fit()
        self.assertTrue(np.isfinite(intercept))
        self.assertTrue(-3.0 <= slope <= -0.75 * a / (1.0 - epsilon))
        self.assertTrue(np.all(np.isfinite(table.decay_diagnostic())))

    def test_agrees_with_more_nodes(self):
        target = Progression(2.0, 0.3)
        coarse = laurent_coeffs(target, 1.0, (-4, 4), 0.25)
        fine = laurent_coeffs(target, 1.0, (-4, 4), 0.25, nodes_per_circle=4096)
        scale = np.abs(fine.values).max()
        self.assertTrue(np.abs(coarse.values - fine.values).max() <= 1e-12 * scale)

    def test_epsilon_out_of_range(self):
        with self.assertRaises(InvalidParameterError):
            laurent_coeffs(Progression(2.0, 0.3), 1.0, (-3, 3), 0.6)
        with self.assertRaises(InvalidParameterError):
            laurent_coeffs(Progression(2.0, 0.3), 1.0, (-3, 3), 0.0)
        with self.assertRaises(InvalidParameterError):
            laurent_coeffs(Progression(2.0, 0.3), 1.0, (-3, 3), 0.25, nodes_per_circle=64)


class BuildAnnihilatorTest(SimpleTestCase):

    def test_shifted_even_integers(self):
        target = Progression(2.0, 0.3)
        result = build_annihilator_1d(target, 1.0, 0.25, (-12, 12))
        self.assertEqual(result.window, (-8.0, 8.0))
        self.assertTrue(result.residual <= 1e-8)
        self.assertTrue(result.identity_error <= 1e-8)
        self.assertTrue(result.sup_norm >= 0.1 * np.abs(result.function.coeffs.values).max())
        # independent check through the product itself
        zeros = target.points((-8, 8))
        self.assertTrue(np.abs(result.eval(zeros)).max() <= 1e-8 * result.sup_norm)
        report = result.report()
        self.assertEqual(report['k_range'], [-12, 12])
        self.assertAlmostEqual(report['rho'], 0.5, places=2)
        self.assertFalse(report['failed'])

    def test_tolerance_miss_is_reported(self):
        with override_settings(ANNIHILATOR_RESIDUAL_TOL=1e-300):
            result = build_annihilator_1d(Progression(2.0, 0.3), 1.0, 0.25, (-12, 12))
        self.assertTrue(result.failed)
        self.assertTrue(result.report()['failed'])

    def test_empty_set(self):
        result = build_annihilator_1d(Empty(), 1.0, k_range=(-3, 3))
        self.assertEqual(result.residual, 0.0)
        self.assertAlmostEqual(result.function.coeffs.get((0,)), 1.0, places=12)
        self.assertAlmostEqual(result.sup_norm, 1.0, places=12)

    def test_every_third_integer(self):
        target = Progression(3.0)
        result = build_annihilator_1d(target, 1.0)
        zeros = target.points(result.window)
        self.assertEqual(len(zeros), 5)
        self.assertTrue(np.abs(result.eval(zeros)).max() <= 1e-8 * result.sup_norm)
        midpoints = result.eval([-1.5, 1.5])
        self.assertTrue(np.abs(midpoints).min() >= 1e-3 * result.sup_norm)

    def test_too_dense(self):
        with self.assertRaises(InfeasibleDensityError):
            build_annihilator_1d(Progression(1.0), 1.0)

    def test_short_range(self):
        with self.assertRaises(InvalidParameterError):
            build_annihilator_1d(Progression(2.0), 1.0, k_range=(0, 2))

    def test_tail_fraction(self):
        self.assertEqual(tail_fraction(np.zeros(10)), 0.0)
        self.assertAlmostEqual(tail_fraction([1, 0, 0, 0, 0, 0, 0, 0, 0, 1]), 1.0)
        self.assertAlmostEqual(tail_fraction([0, 0, 0, 0, 1, 1, 0, 0, 0, 0]), 0.0)


class LiftTest(SimpleTestCase):

    def setUp(self):
        axis = np.linspace(-3.0, 3.0, 41)
        xx, yy = np.meshgrid(axis, axis, indexing='ij')
        self.grid = np.column_stack((xx.ravel(), yy.ravel()))

    def test_single_atom(self):
        lift = lift_to_2d(GaussSeriesFunction(1.0, CoeffGrid.single(0), math.sqrt(2.0)), 1, 1)
        self.assertEqual(lift.series.coeffs.support, ((0, 0), (0, 0)))
        expected = np.exp(-np.sum(self.grid ** 2, axis=1))
        self.assertTrue(np.abs(lift.closed_form(self.grid) - expected).max() <= 1e-14)
        self.assertTrue(np.abs(lift.eval(self.grid) - expected).max() <= 1e-14)

    def test_closed_form_matches_series(self):
        rng = make_rng(31)
        sigma = math.sqrt(5.0)
        for _ in range(20):
            profile = GaussSeriesFunction(1.0, random_grid(rng, (-10, 10)), sigma)
            lift = lift_to_2d(profile, 1, 2, 1.0)
            closed = lift.closed_form(self.grid)
            series = lift.eval(self.grid)
            self.assertTrue(np.abs(closed - series).max() <= 1e-8)
            on_line = np.abs(profile.eval(lift.line_coordinate(self.grid) / sigma))
            self.assertTrue(np.all(np.abs(closed) <= on_line * (1 + 1e-12) + 1e-300))

    def test_coefficient_placement(self):
        profile = GaussSeriesFunction(1.0, CoeffGrid((-1,), [2.0, 3.0, 4.0]), math.sqrt(5.0))
        lift = lift_to_2d(profile, 1, -2)
        self.assertEqual(lift.series.coeffs.get((-1, 2)), 2.0)
        self.assertEqual(lift.series.coeffs.get((1, -2)), 4.0)
        self.assertEqual(lift.series.coeffs.get((0, 1)), 0.0)

    def test_scale_mismatch(self):
        with self.assertRaisesRegex(InvalidParameterError, 'expected sigma = 2.236'):
            lift_to_2d(GaussSeriesFunction(1.0, CoeffGrid.single(0), 1.0), 1, 2)
        with self.assertRaises(InvalidParameterError):
            lift_to_2d(GaussSeriesFunction(1.0, CoeffGrid.single(0), 2.0), 2, 4)


class CriticalCounterexampleTest(SimpleTestCase):

    def test_vanishes_on_critical_set(self):
        first, second = critical_counterexamples(1, 1, np.pi)
        _, config = critical_configs(1, 1, Progression(0.7), Progression(1.0))
        points = build_slanted(config, ((-7, 7), (-7, 7)))
        self.assertTrue(len(points) >= 200)
        chosen = points[make_rng(32).choice(len(points), 200, replace=False)]
        sup = sup_norm_estimate(second.series, ((-7, 7), (-7, 7)), 0.05)
        self.assertTrue(np.abs(second.eval(chosen)).max() <= 1e-8 * sup)
        self.assertTrue(abs(second.eval([[0.0, 0.0]])[0]) >= 0.1 * sup)

    def test_first_function(self):
        first, _ = critical_counterexamples(1, 2, 1.0)
        config, _ = critical_configs(1, 2, Progression(1.0), Progression(0.8))
        points = build_slanted(config, ((-4, 4), (-4, 4)))
        self.assertTrue(len(points) > 10)
        sup = sup_norm_estimate(first.series, ((-4, 4), (-4, 4)), 0.05)
        self.assertTrue(sup > 0)
        self.assertTrue(np.abs(first.eval(points)).max() <= 1e-8 * sup)

    def test_axis_direction(self):
        _, second = critical_counterexamples(1, 0, 1.0)
        comb = alternating_theta(1.0)
        points = make_rng(33).uniform(-3, 3, (50, 2))
        expected = np.exp(-points[:, 0] ** 2) * comb.eval(points[:, 1])
        self.assertTrue(np.abs(second.eval(points) - expected).max() <= 1e-12)
        zeros = np.column_stack((points[:, 0], np.full(50, 1.5)))
        self.assertTrue(np.abs(second.eval(zeros)).max() <= 1e-12)
