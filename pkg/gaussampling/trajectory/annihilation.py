'''
Density labels of line families and annihilators of sparse rational ones.
'''
from dataclasses import dataclass

import numpy as np

from gaussampling.annihilator_factory.construction import build_annihilator_1d
from gaussampling.annihilator_factory.lifts import lift_to_2d
from gaussampling.core_series.series import sup_norm_estimate
from gaussampling.loggers import info_log
from gaussampling.point_sets.density import beurling_density
from gaussampling.point_sets.descriptors import scaled
from gaussampling.trajectory.windowed import TrajectoryWindowed
from gaussampling.utils.decorators import logged_operation
from gaussampling.utils.exceptions import InfeasibleDensityError, InvalidParameterError

SAMPLING = 'sampling'
NOT_SAMPLING = 'not-sampling'
CRITICAL = 'critical, undetermined'
_CRITICAL_TOL = 1e-12


def trajectory_regime(family, radii=None):
    '''Labels `family` by the lower density of its offsets.

    Irrational families sample exactly when ``D-(Gamma) > 0``; rational
    ones when ``D-(Gamma) > 1 / sigma`` and not when it is below. Equality
    is left open.
    '''
    lower = beurling_density(family.offsets, radii).lower
    if not family.is_rational:
        return SAMPLING if lower > 0 else NOT_SAMPLING
    threshold = 1.0 / family.sigma
    if abs(lower - threshold) <= _CRITICAL_TOL:
        return CRITICAL
    return SAMPLING if lower > threshold else NOT_SAMPLING


@dataclass(frozen=True, eq=False)
class TrajectoryAnnihilator:
    '''A lifted annihilator with its vanishing report along the trajectory.'''
    lift: object
    profile: object
    trajectory: TrajectoryWindowed
    upper_density: float
    sup_norm: float
    residual: float

    def eval(self, points):
        return self.lift.eval(points)

    def report(self):
        report = self.profile.report()
        report.update({
            'family': self.trajectory.family.describe(),
            'window': [list(row) for row in self.trajectory.window],
            'upper_density': self.upper_density,
            'trajectory_sup_norm': self.sup_norm,
            'trajectory_residual': self.residual,
        })
        return report


@logged_operation
def annihilator_on_trajectory(family, a, window=((-4.0, 4.0), (-4.0, 4.0)), epsilon=None,
                              k_range=(-12, 12)):
    '''A nonzero function of V_a vanishing on every line of a rational `family`.

    The profile annihilates ``Gamma / sigma`` in the space of scale
    ``sigma``; its lift vanishes where ``(p x + q y) / sigma`` is in ``Gamma``.

    :raises: :class:`InfeasibleDensityError` unless ``D+(Gamma) sigma < 1``.
    '''
    if not family.is_rational:
        raise InvalidParameterError("annihilators exist only for rational slopes")
    upper = beurling_density(family.offsets).upper
    sigma = family.sigma
    if upper * sigma >= 1.0:
        raise InfeasibleDensityError("D+(Gamma) sigma = %.6g is not below 1" % (upper * sigma),
                                     upper_density=upper, sigma=sigma)
    profile = build_annihilator_1d(scaled(family.offsets, 1.0 / sigma), a, epsilon, k_range,
                                   scale=sigma)
    lift = lift_to_2d(profile.function, family.p, family.q)
    trajectory = TrajectoryWindowed(family, window)
    sup = sup_norm_estimate(lift.series, trajectory.window, 0.05)
    samples = trajectory.dense_samples()
    residual = float(np.abs(lift.eval(samples)).max()) / sup if len(samples) else 0.0
    info_log.info("trajectory annihilator for %s: D+=%.4g, sup=%.4g, residual=%.3e",
                  family.describe(), upper, sup, residual)
    return TrajectoryAnnihilator(lift, profile, trajectory, upper, sup, residual)
