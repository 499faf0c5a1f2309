#pylint: disable-all

'''Tests for the Gaussian series evaluation and norm diagnostics.'''
import numpy as np

from django.test import SimpleTestCase
from django.test.utils import override_settings

from gaussampling.core_series.grids import CoeffGrid
from gaussampling.core_series.series import (GaussSeriesFunction, evaluate,
                                             sup_norm_estimate,
                                             lp_norm_equivalence_check,
                                             required_window)
from gaussampling.core_series.serializers import dumps, loads
from gaussampling.tests.basetests import (make_rng, random_function, random_grid,
                                          unit_grid, assert_close)
from gaussampling.utils.exceptions import (InvalidParameterError, PreconditionError,
                                           UnsupportedDomainError)


def alternating(a=np.pi, radius=40):
    values = np.array([(-1.0) ** n for n in range(-radius, radius + 1)])
    return GaussSeriesFunction(a, CoeffGrid((-radius,), values))


class CoeffGridTest(SimpleTestCase):

    def test_support_and_get(self):
        grid = CoeffGrid.from_dict({(-1, 2): 1.0, (3, 0): 2.5})
        self.assertEqual(grid.support, ((-1, 3), (0, 2)))
        self.assertEqual(grid.get((3, 0)), 2.5)
        self.assertEqual(grid.get((0, 0)), 0.0)
        self.assertEqual(grid.get((10, 10)), 0.0)

    def test_empty_support_rejected(self):
        with self.assertRaises(InvalidParameterError):
            CoeffGrid.from_dict({})
        with self.assertRaises(InvalidParameterError):
            CoeffGrid((0,), np.zeros(0))

    def test_values_are_read_only(self):
        grid = CoeffGrid((0,), [1.0, 2.0])
        with self.assertRaises(ValueError):
            grid.values[0] = 3.0

    def test_norms_match_direct_summation(self):
        grid = random_grid(make_rng(1), ((-4, 4), (-3, 5)), complex_values=True)
        mags = np.abs(grid.values).ravel()
        for p in (1.0, 1.5, 2.0, 3.0):
            direct = np.sum(mags ** p) ** (1.0 / p)
            self.assertAlmostEqual(grid.norm(p) / direct, 1.0, places=13)
        self.assertEqual(grid.norm(np.inf), mags.max())

    def test_norm_exponent_below_one(self):
        with self.assertRaises(InvalidParameterError):
            CoeffGrid((0,), [1.0]).norm(0.5)

    def test_padding_keeps_values(self):
        grid = CoeffGrid((0,), [1.0, -2.0])
        padded = grid.padded((-3, 4))
        self.assertEqual(padded.support, ((-3, 4),))
        self.assertEqual(padded.get(1), -2.0)
        self.assertEqual(padded.norm(2), grid.norm(2))
        with self.assertRaises(InvalidParameterError):
            grid.padded((1, 4))


class EvaluateTest(SimpleTestCase):

    def test_single_coefficient_2d(self):
        f = GaussSeriesFunction(1.0, CoeffGrid.single((0, 0)))
        values = f.eval([(0.0, 0.0), (1.0, 0.0)])
        self.assertAlmostEqual(values[0].real, 1.0, places=15)
        self.assertAlmostEqual(values[1].real, 0.36787944117, places=10)
        self.assertEqual(values[1].imag, 0.0)

    def test_invalid_parameters(self):
        grid = CoeffGrid.single(0)
        for a, scale in ((0.0, 1.0), (-1.0, 1.0), (1.0, 0.0), (1.0, -2.0)):
            with self.assertRaises(InvalidParameterError):
                GaussSeriesFunction(a, grid, scale)
        with self.assertRaises(InvalidParameterError):
            GaussSeriesFunction(1.0, grid, 1.0, trunc_tol=1.5)

    def test_complex_strip(self):
        f = GaussSeriesFunction(1.0, CoeffGrid.single(0))
        f.eval([10j])
        with self.assertRaises(UnsupportedDomainError):
            f.eval([0.5 + 10.5j])

    def test_steep_generator_rejects_overflowing_arguments(self):
        f = GaussSeriesFunction(10.0, CoeffGrid.single(0))
        self.assertTrue(np.isfinite(f.eval([0.5 + 5j])[0]))
        with self.assertRaises(UnsupportedDomainError):
            f.eval([0.5 + 9j])
        planar = GaussSeriesFunction(5.0, CoeffGrid.single((0, 0)))
        with self.assertRaises(UnsupportedDomainError):
            planar.eval([(0.0 + 9j, 0.0 + 9j)])

    def test_alternating_comb_vanishes_at_half_integers(self):
        f = alternating()
        peak = sup_norm_estimate(f, (-3.0, 3.0), 0.01)
        value = f.eval([0.5])[0]
        self.assertTrue(abs(value) <= 1e-10 * peak)

    def test_padding_does_not_change_values(self):
        rng = make_rng(2)
        f = random_function(rng, (-5, 5), complex_values=True)
        wider = f.with_coeffs(f.coeffs.padded((-30, 30)))
        points = rng.uniform(-8, 8, 40) + 1j * rng.uniform(-2, 2, 40)
        self.assertTrue(np.array_equal(f.eval(points), wider.eval(points)))

    def test_linearity(self):
        rng = make_rng(3)
        support = ((-4, 4), (-4, 4))
        f = random_function(rng, support)
        g = random_function(rng, support)
        alpha, beta = 0.7 - 0.2j, -1.3
        combined = f.with_coeffs(f.coeffs.scaled(alpha) + g.coeffs.scaled(beta))
        points = rng.uniform(-6, 6, (30, 2))
        expected = alpha * f.eval(points) + beta * g.eval(points)
        assert_close(self, combined.eval(points), expected, rtol=1e-12, atol=1e-14)

    def test_translation_covariance(self):
        rng = make_rng(4)
        f = random_function(rng, ((-4, 4), (-4, 4)))
        moved = f.with_coeffs(f.coeffs.shifted((3, -2)))
        points = rng.uniform(-5, 5, (30, 2))
        assert_close(self, moved.eval(points + np.array([3.0, -2.0])), f.eval(points),
                     rtol=1e-12, atol=1e-14)

    def test_truncation_certificate(self):
        rng = make_rng(5)
        for case in range(100):
            dim = 1 if case % 2 else 2
            support = (-6, 6) if dim == 1 else ((-4, 4), (-4, 4))
            f = random_function(rng, support, a=rng.uniform(0.5, 3.0), complex_values=True)
            reference = GaussSeriesFunction(f.a, f.coeffs, f.scale, trunc_tol=1e-30)
            shape = (3,) if dim == 1 else (3, 2)
            points = rng.uniform(-7, 7, shape) + 1j * rng.uniform(-1, 1, shape)
            ours = evaluate(f, points)
            exact = evaluate(reference, points)
            error = np.abs(exact.values - ours.values)
            self.assertTrue(np.all(error <= ours.bounds + exact.bounds),
                            "certificate violated in case %d" % case)

    def test_chunking_is_invisible(self):
        rng = make_rng(6)
        f = random_function(rng, (-10, 10))
        points = rng.uniform(-12, 12, 50)
        whole = f.eval(points)
        with override_settings(EVAL_CHUNK=7):
            pieces = f.eval(points)
        self.assertTrue(np.array_equal(whole, pieces))


class SupNormTest(SimpleTestCase):

    def test_single_gaussian(self):
        f = GaussSeriesFunction(1.0, CoeffGrid.single((0, 0)))
        self.assertAlmostEqual(sup_norm_estimate(f, ((-1, 1), (-1, 1)), 0.05), 1.0, places=12)

    def test_refinement_is_stable(self):
        f = alternating()
        coarse = sup_norm_estimate(f, (-3, 3), 0.01)
        fine = sup_norm_estimate(f, (-3, 3), 0.005)
        self.assertTrue(coarse > 0)
        self.assertAlmostEqual(coarse / fine, 1.0, places=3)

    def test_zero_function(self):
        f = GaussSeriesFunction(1.0, CoeffGrid.zeros((-3, 3)))
        self.assertEqual(sup_norm_estimate(f, (-2, 2), 0.1), 0.0)

    def test_bad_windows(self):
        f = GaussSeriesFunction(1.0, CoeffGrid.single(0))
        with self.assertRaises(InvalidParameterError):
            sup_norm_estimate(f, (1, -1), 0.1)
        with self.assertRaises(PreconditionError):
            sup_norm_estimate(f, (-1, 1), 0.5)


class NormEquivalenceTest(SimpleTestCase):

    def test_single_coefficient_closed_form(self):
        f = GaussSeriesFunction(1.0, CoeffGrid.single(0))
        report = lp_norm_equivalence_check(f, 2)
        self.assertAlmostEqual(report.ratio, (np.pi / 2) ** 0.25, places=8)
        self.assertAlmostEqual(report.coefficient_norm, 1.0)

    def test_far_coefficients_are_orthogonal(self):
        single = lp_norm_equivalence_check(GaussSeriesFunction(1.0, CoeffGrid.single(0)), 2)
        pair = GaussSeriesFunction(1.0, CoeffGrid.from_dict({0: 1.0, 30: 1.0}))
        report = lp_norm_equivalence_check(pair, 2)
        self.assertTrue(abs(report.ratio - single.ratio) <= 1e-6)

    def test_zero_coefficients_are_degenerate(self):
        report = lp_norm_equivalence_check(GaussSeriesFunction(1.0, CoeffGrid.zeros((0, 3))), 2)
        self.assertTrue(report.degenerate)
        self.assertEqual(report.function_norm, 0.0)
        self.assertEqual(report.coefficient_norm, 0.0)
        self.assertIsNone(report.ratio)

    def test_small_window_reports_inflation(self):
        f = GaussSeriesFunction(4.0, CoeffGrid.single(0))
        with self.assertRaises(PreconditionError) as ctx:
            lp_norm_equivalence_check(f, 2, (-1.0, 1.0))
        self.assertAlmostEqual(ctx.exception.required_inflation, 2.5)

    def test_scaled_default_window_covers_support(self):
        # terms stay centred on the integers, so the window does not shrink with scale
        f = GaussSeriesFunction(1.0, CoeffGrid((0,), np.ones(11)), scale=2.0)
        self.assertEqual(required_window(f), ((-2.5, 12.5),))
        default = lp_norm_equivalence_check(f, 2)
        wide = lp_norm_equivalence_check(f, 2, (-5.0, 15.0))
        self.assertTrue(abs(default.function_norm - wide.function_norm) <= 1e-10 * wide.function_norm)
        with self.assertRaises(PreconditionError):
            lp_norm_equivalence_check(f, 2, (-2.5, 7.5))

    def test_ratio_spread_is_bounded(self):
        rng = make_rng(7)
        ratios = []
        for _ in range(50):
            f = GaussSeriesFunction(1.0, unit_grid(rng, (-8, 8)))
            ratios.append(lp_norm_equivalence_check(f, 2).ratio)
        self.assertTrue(max(ratios) / min(ratios) < 10)
        self.assertTrue(min(ratios) > 0)


class SerializerTest(SimpleTestCase):

    def test_dump_and_load(self):
        f = random_function(make_rng(8), ((-2, 2), (0, 3)), a=np.pi, scale=0.5,
                            complex_values=True)
        text = dumps(f)
        self.assertTrue(text.startswith('2 3.141592653589793 0.5 2.0\n'))
        back = loads(text)
        self.assertEqual(back.coeffs.support, f.coeffs.support)
        self.assertTrue(np.array_equal(back.coeffs.values, f.coeffs.values))
        self.assertEqual(back.a, f.a)

    def test_malformed_rows(self):
        with self.assertRaises(InvalidParameterError):
            loads('1 1.0 1.0\n0 1.0 0.0\n')
        with self.assertRaises(InvalidParameterError):
            loads('1 1.0 1.0 2.0\n0 1.0\n')
        with self.assertRaises(InvalidParameterError):
            loads('1 1.0 1.0 2.0\n0 1.0 0.0\n0 2.0 0.0\n')
