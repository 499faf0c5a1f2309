#pylint: disable-all

'''Tests for sampling matrices, bound estimates and reconstruction.'''
import io

import numpy as np

from django.test import SimpleTestCase
from django.test.utils import override_settings

from gaussampling.core_series.series import GaussSeriesFunction
from gaussampling.frame_estimator.bounds import bound_trend, estimate_bounds
from gaussampling.frame_estimator.matrices import (SamplingMatrix, assemble, centered_window,
                                                   export_matrix)
from gaussampling.frame_estimator.reconstruction import reconstruct
from gaussampling.point_sets.descriptors import Progression, Puncture
from gaussampling.point_sets.slanted import SlantedConfig, build_slanted
from gaussampling.tests.basetests import assert_close, make_rng, random_grid
from gaussampling.utils.exceptions import (InvalidParameterError, PreconditionError,
                                           RankError)


def integer_grid(lo, hi):
    axis = np.arange(lo, hi + 1, dtype=float)
    xx, yy = np.meshgrid(axis, axis, indexing='ij')
    return np.column_stack((xx.ravel(), yy.ravel()))


class AssembleTest(SimpleTestCase):

    def test_single_entry(self):
        matrix = assemble(1.0, 1.0, [0.0], (0, 0))
        self.assertEqual(matrix.dense().tolist(), [[1.0]])

    def test_single_column(self):
        matrix = assemble(1.0, 1.0, [0.0, 1.0], (0, 0))
        self.assertEqual(matrix.shape, (2, 1))
        self.assertAlmostEqual(matrix.dense()[1, 0], np.exp(-1.0), places=15)

    def test_integer_grid_2d(self):
        matrix = assemble(np.pi, 1.0, integer_grid(-2, 2), ((-2, 2), (-2, 2)))
        dense = matrix.dense()
        self.assertEqual(dense.shape, (25, 25))
        self.assertTrue(np.allclose(np.diag(dense), 1.0, rtol=0, atol=1e-15))
        # columns are lexicographic, so (0, 0) -> (0, 1) is one column over
        self.assertAlmostEqual(dense[12, 13], 0.0432139, places=7)
        self.assertAlmostEqual(dense[12, 7], 0.0432139, places=7)

    def test_invalid_inputs(self):
        with self.assertRaises(InvalidParameterError):
            assemble(0.0, 1.0, [0.0], (0, 0))
        with self.assertRaises(InvalidParameterError):
            assemble(1.0, 1.0, [], (0, 0))
        with self.assertRaises(InvalidParameterError):
            assemble(1.0, 1.0, [0.0], (2, 1))

    def test_entries_match_formula(self):
        rng = make_rng(20)
        samples = rng.uniform(-6, 6, (60, 2))
        matrix = assemble(0.7, 1.3, samples, ((-4, 4), (-3, 3)))
        dense = matrix.dense()
        self.assertTrue(np.all((dense >= 0) & (dense <= 1)))
        for _ in range(100):
            row = rng.integers(dense.shape[0])
            column = rng.integers(dense.shape[1])
            expected = matrix.entry(row, column)
            self.assertTrue(abs(dense[row, column] - expected) <= 1e-14 * max(expected, 1e-300))

    def test_export(self):
        matrix = assemble(1.0, 1.0, [0.0, 0.5], (0, 1))
        stream = io.StringIO()
        export_matrix(matrix, stream)
        lines = stream.getvalue().splitlines()
        self.assertEqual(len(lines), 3)
        self.assertTrue(lines[0].startswith('# rows=2 columns=2 dim=1 a=1.0 scale=1.0'))
        self.assertEqual(lines[1].split()[:3], ['0.0', '1.0', repr(float(np.exp(-1.0)))])


class EstimateBoundsTest(SimpleTestCase):

    def test_identity(self):
        estimate = estimate_bounds(SamplingMatrix.from_array([[1.0]]), 0)
        self.assertEqual((estimate.A_est, estimate.B_est), (1.0, 1.0))

    def test_orthonormal_columns(self):
        basis, _ = np.linalg.qr(make_rng(21).normal(size=(12, 5)))
        estimate = estimate_bounds(SamplingMatrix.from_array(basis), 0)
        self.assertAlmostEqual(estimate.A_est, 1.0, places=12)
        self.assertAlmostEqual(estimate.B_est, 1.0, places=12)

    def test_empty_interior(self):
        matrix = assemble(1.0, 1.0, np.arange(-10.0, 11.0), (0, 3))
        with self.assertRaises(PreconditionError):
            estimate_bounds(matrix, 5)

    def test_stable_when_windows_double(self):
        small = estimate_bounds(assemble(np.pi, 1.0, np.arange(-30.0, 31.0), (-20, 20)), 5)
        large = estimate_bounds(assemble(np.pi, 1.0, np.arange(-60.0, 61.0), (-40, 40)), 5)
        self.assertTrue(small.A_est > 0)
        self.assertTrue(0.5 <= large.A_est / small.A_est <= 2.0)
        self.assertTrue(small.A_est <= small.B_est)

    def test_row_order_does_not_matter(self):
        config = SlantedConfig(1, 1, Progression(0.9), Progression(0.9))
        samples = build_slanted(config, ((-8, 8), (-8, 8)))
        window = centered_window(6, 2)
        first = estimate_bounds(assemble(np.pi, 1.0, samples, window), 2)
        shuffled = samples[make_rng(22).permutation(len(samples))]
        second = estimate_bounds(assemble(np.pi, 1.0, shuffled, window), 2)
        self.assertTrue(abs(first.A_est - second.A_est) <= 1e-12 * first.B_est)
        self.assertTrue(abs(first.B_est - second.B_est) <= 1e-12 * first.B_est)

    def test_more_samples_never_hurt(self):
        rng = make_rng(23)
        samples = rng.uniform(-9, 9, (200, 2))
        extra = np.vstack((samples, rng.uniform(-9, 9, (50, 2))))
        window = centered_window(8, 2)
        before = estimate_bounds(assemble(1.0, 1.0, samples, window), 2)
        after = estimate_bounds(assemble(1.0, 1.0, extra, window), 2)
        self.assertTrue(after.A_est >= before.A_est - 1e-10)
        self.assertTrue(after.B_est >= before.B_est - 1e-10)

    def test_storages_agree(self):
        samples = np.arange(-30.0, 31.0) + 0.1
        dense = estimate_bounds(assemble(np.pi, 1.0, samples, (-20, 20)), 5)
        gram = estimate_bounds(assemble(np.pi, 1.0, samples, (-20, 20), storage='gram'), 5)
        self.assertAlmostEqual(gram.A_est / dense.A_est, 1.0, places=8)
        self.assertAlmostEqual(gram.B_est / dense.B_est, 1.0, places=8)
        with override_settings(DENSE_SVD_MAX_COLUMNS=10):
            matrix = assemble(np.pi, 1.0, samples, (-20, 20))
            self.assertEqual(matrix.storage, 'sparse')
            iterative = estimate_bounds(matrix, 5)
        self.assertAlmostEqual(iterative.A_est / dense.A_est, 1.0, places=6)
        self.assertAlmostEqual(iterative.B_est / dense.B_est, 1.0, places=6)
        self.assertIn('residual', iterative.diagnostics)

    def test_triangular_factor_keeps_singular_values(self):
        # 5001 rows span three QR row blocks
        samples = np.linspace(-30.0, 30.0, 5001)
        dense = estimate_bounds(assemble(1.0, 1.0, samples, (-20, 20)), 5)
        matrix = assemble(1.0, 1.0, samples, (-20, 20), storage='triangular')
        self.assertEqual(matrix.data.shape, (41, 41))
        triangular = estimate_bounds(matrix, 5)
        self.assertAlmostEqual(triangular.A_est / dense.A_est, 1.0, places=8)
        self.assertAlmostEqual(triangular.B_est / dense.B_est, 1.0, places=8)
        assert_close(self, matrix.gram(), assemble(1.0, 1.0, samples, (-20, 20)).gram(),
                     rtol=1e-10, atol=1e-8)
        with self.assertRaises(PreconditionError):
            matrix.dense()


class BoundTrendTest(SimpleTestCase):

    def test_integers_are_stable(self):
        trend = bound_trend(Progression(1.0), np.pi, [10, 20, 40], 5)
        self.assertEqual([row.N for row in trend.rows], [10, 20, 40])
        self.assertTrue(trend.spread <= 2.0)

    def test_punctured_integers_decay(self):
        trend = bound_trend(Puncture(Progression(1.0), (0.0,)), np.pi, [10, 20, 40], 5)
        self.assertTrue(trend.strictly_decreasing())
        self.assertTrue(trend.rows[-1].A_est <= 0.5 * trend.rows[0].A_est)

    def test_sparse_progression_decays(self):
        trend = bound_trend(Progression(2.0), np.pi, [10, 20, 40], 5)
        self.assertTrue(trend.decay >= 10)

    def test_dense_slanted_lattice_is_stable(self):
        config = SlantedConfig(1, 1, Progression(0.9), Progression(0.9))
        trend = bound_trend(config, np.pi, [10, 20, 40], 5)
        self.assertTrue(trend.spread <= 2.0)

    def test_sparse_slanted_lattice_decays(self):
        config = SlantedConfig(1, 1, Progression(1.2), Progression(1.2))
        trend = bound_trend(config, np.pi, [10, 20, 40], 5)
        self.assertTrue(trend.decay >= 10)

    def test_needs_three_sizes(self):
        with self.assertRaises(InvalidParameterError):
            bound_trend(Progression(1.0), np.pi, [10, 20], 5)
        with self.assertRaises(InvalidParameterError):
            bound_trend(Progression(1.0), np.pi, [20, 10, 40], 5)


class ReconstructTest(SimpleTestCase):

    def setUp(self):
        self.samples = integer_grid(-10, 10)
        self.matrix = assemble(np.pi, 1.0, self.samples, centered_window(10, 2))

    def test_exact_samples(self):
        truth = random_grid(make_rng(24), ((-5, 5), (-5, 5)))
        values = GaussSeriesFunction(np.pi, truth).eval(self.samples)
        result = reconstruct(self.matrix, values)
        self.assertTrue(np.max(np.abs(result.coeffs.values - truth.values)) <= 1e-8)
        self.assertEqual(result.coeffs.support, truth.support)

    def test_zero_samples(self):
        result = reconstruct(self.matrix, np.zeros(len(self.samples)))
        self.assertTrue(result.coeffs.is_zero())
        self.assertEqual(result.residual, 0.0)

    def test_noise_bound(self):
        rng = make_rng(25)
        estimate = estimate_bounds(self.matrix, 0)
        rows = len(self.samples)
        bound = 1e-3 * np.sqrt(rows) / np.sqrt(estimate.A_est)
        for _ in range(20):
            truth = random_grid(rng, ((-5, 5), (-5, 5)))
            values = self.matrix.dense() @ truth.values.ravel() + rng.normal(0, 1e-3, rows)
            result = reconstruct(self.matrix, values)
            self.assertTrue(np.max(np.abs(result.coeffs.values - truth.values)) <= bound)

    def test_zero_matrix(self):
        with self.assertRaises(RankError):
            reconstruct(SamplingMatrix.from_array(np.zeros((3, 2))), np.ones(3))
