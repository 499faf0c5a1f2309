#pylint: disable-all

'''Tests for windowed trajectories, discretisations and trajectory annihilators.'''
import math

import numpy as np

from django.test import SimpleTestCase
from django.test.utils import override_settings

from gaussampling.core_series.grids import CoeffGrid
from gaussampling.core_series.series import GaussSeriesFunction
from gaussampling.point_sets.descriptors import Empty, Explicit, Progression
from gaussampling.point_sets.slanted import LineFamily
from gaussampling.tests.basetests import make_rng, random_grid
from gaussampling.trajectory.annihilation import (CRITICAL, NOT_SAMPLING, SAMPLING,
                                                  annihilator_on_trajectory, trajectory_regime)
from gaussampling.trajectory.decomposition import evaluate_decomposition, line_decomposition
from gaussampling.trajectory.discretization import discretize, min_separation, st_bound_trend
from gaussampling.trajectory.windowed import TrajectoryWindowed, line_integral_p
from gaussampling.utils.exceptions import (AccuracyError, InfeasibleDensityError,
                                           InvalidParameterError)

GOLDEN = (1.0 + math.sqrt(5.0)) / 2.0


def atom(index=(0, 0), a=1.0):
    return GaussSeriesFunction(a, CoeffGrid.single(index))


class TrajectoryWindowedTest(SimpleTestCase):

    def test_segments_lie_on_lines(self):
        family = LineFamily.rational(1, 2, Progression(0.7, 0.1))
        trajectory = TrajectoryWindowed(family, ((-5, 5), (-3, 4)))
        self.assertTrue(len(trajectory.segments) > 5)
        for segment in trajectory.segments:
            ends = family.line_points(segment.offset, [segment.start, segment.end])
            self.assertTrue(np.all(family.residuals(ends, segment.offset) <= 1e-12))
            self.assertTrue(np.all(ends[:, 0] >= -5 - 1e-12) and np.all(ends[:, 0] <= 5 + 1e-12))
            self.assertTrue(np.all(ends[:, 1] >= -3 - 1e-12) and np.all(ends[:, 1] <= 4 + 1e-12))

    def test_axis_aligned_segments(self):
        trajectory = TrajectoryWindowed(LineFamily.rational(1, 0, Progression(1.0)),
                                        ((0, 3), (0, 3)))
        self.assertEqual([s.offset for s in trajectory.segments], [0.0, 1.0, 2.0, 3.0])
        self.assertAlmostEqual(trajectory.length, 12.0, places=12)

    def test_invalid_window(self):
        family = LineFamily.rational(1, 0, Progression(1.0))
        with self.assertRaises(InvalidParameterError):
            TrajectoryWindowed(family, ((0, -1), (0, 1)))
        with self.assertRaises(InvalidParameterError):
            TrajectoryWindowed(family, ((0, np.inf), (0, 1)))


class LineIntegralTest(SimpleTestCase):

    def test_zero_function(self):
        trajectory = TrajectoryWindowed(LineFamily.rational(1, 0, Progression(1.0)),
                                        ((-3, 3), (-3, 3)))
        zero = GaussSeriesFunction(1.0, CoeffGrid.zeros(((0, 1), (0, 1))))
        self.assertEqual(line_integral_p(zero, trajectory, 2), 0.0)

    def test_single_atom_on_its_line(self):
        trajectory = TrajectoryWindowed(LineFamily.rational(1, 0, Explicit((0.0,))),
                                        ((-1, 1), (-8, 8)))
        value = line_integral_p(atom(), trajectory, 2)
        self.assertTrue(abs(value / math.sqrt(math.pi / 2.0) - 1.0) <= 1e-6)

    def test_offset_line(self):
        trajectory = TrajectoryWindowed(LineFamily.rational(1, 0, Explicit((1.0,))),
                                        ((-2, 2), (-8, 8)))
        value = line_integral_p(atom(), trajectory, 2)
        expected = math.exp(-2.0) * math.sqrt(math.pi / 2.0)
        self.assertTrue(abs(value / expected - 1.0) <= 1e-6)

    def test_rotation_invariance(self):
        window = ((-8, 8), (-8, 8))
        diagonal = TrajectoryWindowed(LineFamily.rational(1, 1, Explicit((0.0,))), window)
        vertical = TrajectoryWindowed(
            LineFamily.rational(1, 0, Explicit((1.0 / math.sqrt(2.0),))), window)
        expected = math.exp(-1.0) * math.sqrt(math.pi / 2.0)
        # the atom at (1, 0) is 1/sqrt(2) from the diagonal line
        self.assertTrue(abs(line_integral_p(atom((1, 0)), diagonal, 2) / expected - 1) <= 1e-6)
        self.assertTrue(abs(line_integral_p(atom(), vertical, 2) / expected - 1) <= 1e-6)

    def test_invalid_p(self):
        trajectory = TrajectoryWindowed(LineFamily.rational(1, 0, Progression(1.0)),
                                        ((-3, 3), (-3, 3)))
        with self.assertRaises(InvalidParameterError):
            line_integral_p(atom(), trajectory, 0.5)
        with self.assertRaises(InvalidParameterError):
            line_integral_p(atom(), trajectory, np.inf)

    @override_settings(QUADRATURE_FLOOR=0.04)
    def test_refinement_floor(self):
        trajectory = TrajectoryWindowed(LineFamily.rational(1, 0, Explicit((0.3,))),
                                        ((-1, 1), (-4, 4)))
        with self.assertRaises(AccuracyError) as caught:
            line_integral_p(atom(), trajectory, 1)
        self.assertTrue(caught.exception.previous > 0)
        self.assertTrue(caught.exception.last > 0)


class DiscretizeTest(SimpleTestCase):

    def test_axis_aligned(self):
        trajectory = TrajectoryWindowed(LineFamily.rational(1, 0, Progression(1.0)),
                                        ((0, 3), (0, 3)))
        points = discretize(trajectory, 0.3)
        self.assertEqual(sorted(set(np.round(points[:, 0], 12))), [0.0, 1.0, 2.0, 3.0])
        column = np.sort(points[points[:, 0] == 1.0][:, 1])
        self.assertTrue(np.allclose(np.diff(column), 0.3))
        self.assertAlmostEqual(column[0], 0.15, places=12)

    def test_empty_offsets(self):
        trajectory = TrajectoryWindowed(LineFamily.rational(1, 0, Empty()), ((0, 3), (0, 3)))
        self.assertEqual(discretize(trajectory, 0.3).shape, (0, 2))

    def test_delta_rule(self):
        trajectory = TrajectoryWindowed(LineFamily.rational(1, 0, Progression(0.6)),
                                        ((0, 3), (0, 3)))
        with self.assertRaisesRegex(InvalidParameterError, 'delta\\(Gamma\\) / 3'):
            discretize(trajectory, 0.2)
        with self.assertRaises(InvalidParameterError):
            discretize(trajectory, 0.0)

    def test_separation_for_random_families(self):
        rng = make_rng(40)
        pairs = [(1, 0), (0, 1), (1, 1), (1, 2), (2, 1), (1, -3), (3, 2), (2, -5)]
        for _ in range(20):
            p, q = pairs[rng.integers(len(pairs))]
            alpha = rng.uniform(0.5, 2.0)
            family = LineFamily.rational(p, q, Progression(alpha, rng.uniform(0, 1)))
            delta = rng.uniform(0.05, 0.3) * alpha
            points = discretize(TrajectoryWindowed(family, ((-6, 6), (-5, 7))), delta)
            self.assertTrue(len(points) > 0)
            self.assertTrue(min_separation(points) >= delta * (1 - 1e-9))
            offsets = family.offsets.points((-20, 20))
            ranks = points @ family.normal
            self.assertTrue(np.abs(ranks[:, None] - offsets[None, :]).min(axis=1).max() <= 1e-12)

    def test_weighted_sum_tracks_integral(self):
        rng = make_rng(41)
        family = LineFamily.rational(1, 2, Progression(0.8))
        trajectory = TrajectoryWindowed(family, ((-4, 4), (-4, 4)))
        points = discretize(trajectory, 0.05)
        for _ in range(20):
            f = GaussSeriesFunction(1.0, random_grid(rng, ((-2, 2), (-2, 2))))
            integral = line_integral_p(f, trajectory, 2)
            discrete = 0.05 * np.sum(np.abs(f.eval(points)) ** 2)
            self.assertTrue(0.25 <= discrete / integral <= 4.0)


class BoundTrendTest(SimpleTestCase):

    def test_dense_rational_family_is_stable(self):
        family = LineFamily.rational(1, 1, Progression(0.6))
        trend = st_bound_trend(family, np.pi, [10, 20, 40], 0.1)
        self.assertEqual([row.N for row in trend.rows], [10, 20, 40])
        # N = 10 keeps a single interior column; stability holds from N = 20 on
        later = [row.A_est for row in trend.rows[1:]]
        self.assertTrue(max(later) <= 2 * min(later))
        self.assertTrue(trend.rows[-1].A_est >= 1e-4 * trend.rows[-1].B_est)

    def test_sparse_rational_family_decays(self):
        trend = st_bound_trend(LineFamily.rational(1, 1, Progression(4.0)), np.pi,
                               [10, 20, 40], 0.1)
        self.assertTrue(trend.decay >= 10)

    def test_triangular_storage_resolves_small_bounds(self):
        family = LineFamily.irrational(GOLDEN, Progression(4.0))
        trend = st_bound_trend(family, np.pi, [10, 20, 40], 0.1)
        self.assertTrue(all(row.A_est > 0 for row in trend.rows))
        self.assertTrue(np.isfinite(trend.spread))
        clipped = st_bound_trend(family, np.pi, [10, 20], 0.1, storage='gram')
        floor = 1e-15 * trend.rows[1].B_est
        self.assertTrue(clipped.rows[-1].A_est <= trend.rows[1].A_est + floor)

    def test_delta_is_checked(self):
        with self.assertRaises(InvalidParameterError):
            st_bound_trend(LineFamily.rational(1, 1, Progression(0.6)), np.pi, [10, 20, 40], 0.3)


class RegimeTest(SimpleTestCase):

    def test_labels(self):
        self.assertEqual(trajectory_regime(LineFamily.irrational(GOLDEN, Progression(4.0))),
                         SAMPLING)
        self.assertEqual(trajectory_regime(LineFamily.irrational(GOLDEN, Empty())), NOT_SAMPLING)
        self.assertEqual(trajectory_regime(LineFamily.rational(1, 1, Progression(0.6))), SAMPLING)
        self.assertEqual(trajectory_regime(LineFamily.rational(1, 1, Progression(4.0))),
                         NOT_SAMPLING)
        critical = LineFamily.rational(1, 1, Progression(math.sqrt(2.0)))
        self.assertEqual(trajectory_regime(critical), CRITICAL)


class TrajectoryAnnihilatorTest(SimpleTestCase):

    def test_diagonal_lines(self):
        family = LineFamily.rational(1, 1, Progression(2.0))
        result = annihilator_on_trajectory(family, 1.0)
        self.assertTrue(result.residual <= 1e-6)
        self.assertTrue(result.sup_norm >= 0.1 * np.abs(result.lift.series.coeffs.values).max())
        self.assertEqual(result.report()['family'], family.describe())

    def test_vertical_lines_separate(self):
        family = LineFamily.rational(1, 0, Progression(2.0))
        result = annihilator_on_trajectory(family, 1.0)
        points = make_rng(42).uniform(-3, 3, (40, 2))
        expected = result.profile.eval(points[:, 0]) * np.exp(-points[:, 1] ** 2)
        scale = np.abs(result.profile.function.coeffs.values).max()
        self.assertTrue(np.abs(result.eval(points) - expected).max() <= 1e-10 * scale)

    def test_dense_family_rejected(self):
        with self.assertRaises(InfeasibleDensityError):
            annihilator_on_trajectory(LineFamily.rational(1, 1, Progression(1.0)), 1.0)
        with self.assertRaises(InvalidParameterError):
            annihilator_on_trajectory(LineFamily.irrational(GOLDEN, Progression(4.0)), 1.0)


class LineDecompositionTest(SimpleTestCase):

    def test_reproduces_direct_evaluation(self):
        rng = make_rng(43)
        points = rng.uniform(-3, 3, (60, 2))
        for p, q in [(1, 0), (1, 1), (1, 2), (2, -3)]:
            f = GaussSeriesFunction(1.3, random_grid(rng, ((-4, 4), (-3, 5))))
            decomposition = line_decomposition(f, p, q)
            direct = f.eval(points)
            rebuilt = evaluate_decomposition(decomposition, points)
            scale = np.abs(direct).max()
            self.assertTrue(np.abs(rebuilt - direct).max() <= 1e-10 * scale)

    def test_lift_has_one_class(self):
        family = LineFamily.rational(1, 2, Progression(3.0))
        result = annihilator_on_trajectory(family, 1.0)
        decomposition = line_decomposition(result.lift.series, 1, 2)
        self.assertEqual([line.k for line in decomposition.classes], [0])
        for gamma in family.offsets.points((-6, 6)):
            self.assertTrue(decomposition.line_residual(gamma) <= 1e-8 * result.profile.sup_norm)
