'''
Separation, Beurling densities and counting bounds of point sets.
'''
from dataclasses import dataclass

import numpy as np

from gaussampling.loggers import debug_log
from gaussampling.point_sets.descriptors import Progression
from gaussampling.utils.conf import setting
from gaussampling.utils.decorators import logged_operation
from gaussampling.utils.exceptions import InvalidParameterError, UndefinedSeparationError


@logged_operation
def separation(point_set, window):
    '''The smallest gap between consecutive points of `point_set` in `window`.

    Progressions return their step exactly.

    :raises: :class:`UndefinedSeparationError` with fewer than two points.
    '''
    points = point_set.points(window)
    if points.size < 2:
        raise UndefinedSeparationError(
            "separation needs two points, found %d in [%g, %g]" % ((points.size,) + tuple(window)),
            count=int(points.size))
    if isinstance(point_set, Progression):
        return point_set.alpha
    return float(np.min(np.diff(points)))


@dataclass(frozen=True)
class DensityRow:
    radius: float
    lower: float
    upper: float


@dataclass(frozen=True)
class DensityEstimate:
    '''Lower and upper Beurling densities.

    ``exact`` is set when ``lower`` and ``upper`` are the closed form limit
    of the descriptor rather than the largest windowed estimate.
    '''
    lower: float
    upper: float
    exact: bool
    table: tuple


def _window_counts(points, centers, length):
    '''Counts in the half-open windows ``[x - R/2, x + R/2)``.'''
    left = np.searchsorted(points, centers - length / 2.0, side='left')
    right = np.searchsorted(points, centers + length / 2.0, side='left')
    return right - left


@logged_operation
def beurling_density(point_set, radii=None, center_step=None):
    '''Windowed estimates of the lower and upper Beurling densities.

    For every window length ``R`` in `radii` the window slides over centres
    in ``[-R_max, R_max]`` with step `center_step` (default half the
    separation), and the infimum and supremum of ``count / R`` are recorded.

    :returns: :class:`DensityEstimate`; the final estimates use the largest
              ``R`` unless the descriptor has a closed form limit.
    '''
    radii = sorted(float(r) for r in (radii or setting('DENSITY_RADII', [25, 50, 100, 200])))
    if radii[0] <= 0:
        raise InvalidParameterError("window lengths must be positive")
    if center_step is None:
        delta = point_set.delta
        center_step = delta / 2.0 if delta else 0.5
    if center_step <= 0:
        raise InvalidParameterError("center_step must be positive")
    reach = radii[-1]
    centers = np.arange(-reach, reach + center_step / 2.0, center_step)
    points = point_set.points((-reach - reach, reach + reach))
    table = []
    for radius in radii:
        density = _window_counts(points, centers, radius) / radius
        table.append(DensityRow(radius, float(density.min()), float(density.max())))
    limit = point_set.density_limit
    if limit is not None:
        return DensityEstimate(limit, limit, True, tuple(table))
    debug_log.debug("windowed densities for %s: %s", point_set, table[-1])
    return DensityEstimate(table[-1].lower, table[-1].upper, False, tuple(table))


@dataclass(frozen=True)
class CountingBound:
    '''``max(#Γ ∩ [0, r), #Γ ∩ (-r, 0)) <= rho * r + K``.'''
    rho: float
    K: float


@logged_operation
def counting_bounds(point_set, r_max=None):
    '''Measures the linear counting bound of `point_set`.

    ``rho`` is the closed form density when the descriptor knows it, and
    otherwise the least-squares slope of the larger one-sided count over
    ``(0, r_max]``; ``K`` is the least constant making the bound hold at
    every jump of the counting functions up to `r_max`.
    '''
    r_max = float(r_max or setting('COUNTING_WINDOW', 200))
    points = point_set.points((-r_max, r_max))
    if points.size == 0:
        return CountingBound(0.0, 0.0)
    positive = points[points >= 0]
    negative = -points[points < 0][::-1]

    def larger_count(radii):
        ahead = np.searchsorted(positive, radii, side='left')
        behind = np.searchsorted(negative, radii, side='left')
        return np.maximum(ahead, behind)

    limit = point_set.density_limit
    if limit is not None:
        slope = float(limit)
    else:
        grid = np.linspace(0.0, r_max, 4 * int(r_max) + 1)[1:]
        slope = max(float(np.polyfit(grid, larger_count(grid), 1)[0]), 0.0)
    jumps = np.concatenate((positive, negative))
    jumps = jumps[jumps < r_max]
    if jumps.size == 0:
        return CountingBound(slope, 0.0)
    just_after = np.nextafter(jumps, np.inf)
    excess = larger_count(just_after) - slope * just_after
    return CountingBound(slope, float(max(excess.max(), 0.0)))


def planar_density(points, center, radius):
    '''Points per unit area in the closed disk of `radius` around `center`.'''
    points = np.asarray(points, dtype=float).reshape(-1, 2)
    inside = np.sum((points - np.asarray(center, dtype=float)) ** 2, axis=1) <= radius * radius
    return float(np.count_nonzero(inside)) / (np.pi * radius * radius)
