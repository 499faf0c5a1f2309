'''
Separated point sets that stand in for a trajectory.

Each line is cut into slanted cubes of side ``delta`` along the tangent,
``delta k <= t < delta (k + 1)``. Every cube that meets the clipped segment
contributes the segment point nearest its centre ``delta (k + 1/2)``. A
clamped end point closer than ``delta`` to its neighbour is dropped, so
points on a line are at least ``delta`` apart; distinct lines are at least
``delta(Gamma) > 3 delta`` apart.

Sampling along the trajectory is then compared with sampling on these
points weighted by ``sqrt(delta)``, which is how :func:`st_bound_trend`
estimates the continuous bounds.
'''
import numpy as np
from scipy.spatial import cKDTree

from gaussampling.frame_estimator.bounds import check_sizes, estimate_bounds, trend_from
from gaussampling.frame_estimator.matrices import assemble, centered_window
from gaussampling.loggers import info_log
from gaussampling.trajectory.windowed import TrajectoryWindowed
from gaussampling.utils.conf import setting
from gaussampling.utils.decorators import logged_operation
from gaussampling.utils.exceptions import AccuracyError, InvalidParameterError

_SEPARATION_RTOL = 1e-9


def min_separation(points):
    '''Smallest distance between two of `points`; ``inf`` for fewer than two.'''
    points = np.asarray(points, dtype=float)
    if len(points) < 2:
        return np.inf
    distances, _ = cKDTree(points).query(points, k=2)
    return float(distances[:, 1].min())


def _cube_parameters(segment, delta):
    first = int(np.floor(segment.start / delta))
    last = int(np.ceil(segment.end / delta)) - 1
    ts = np.clip(delta * (np.arange(first, last + 1) + 0.5), segment.start, segment.end)
    floor = delta * (1.0 - _SEPARATION_RTOL)
    if len(ts) >= 2 and ts[1] - ts[0] < floor:
        ts = ts[1:]
    if len(ts) >= 2 and ts[-1] - ts[-2] < floor:
        ts = ts[:-1]
    return ts


@logged_operation
def discretize(trajectory, delta):
    '''One point per slanted cube of side `delta` met by `trajectory`.

    :param delta: In ``(0, delta(Gamma) / 3)``, where ``delta(Gamma)`` is the
                  separation of the line offsets.
    :returns: ``(P, 2)`` array, line by line.
    :raises: :class:`InvalidParameterError` for `delta` outside that range.
    '''
    delta = float(delta)
    if not delta > 0:
        raise InvalidParameterError("delta must be positive, got %r" % delta)
    spacing = trajectory.family.offsets.delta
    if spacing is not None and not delta < spacing / 3.0:
        raise InvalidParameterError("delta must be below delta(Gamma) / 3 = %.6g, got %r"
                                    % (spacing / 3.0, delta))
    family = trajectory.family
    chunks = [family.line_points(segment.offset, _cube_parameters(segment, delta))
              for segment in trajectory.segments]
    points = np.vstack(chunks) if chunks else np.zeros((0, 2))
    gap = min_separation(points)
    if gap < delta * (1.0 - _SEPARATION_RTOL):
        raise AccuracyError("discretisation points are %.3e apart, below delta = %g"
                            % (gap, delta), separation=gap)
    return points


def trajectory_box(size):
    '''The box ``[-N/2 - M, N/2 + M]^2`` with ``M = SAMPLE_MARGIN``.'''
    reach = size / 2.0 + setting('SAMPLE_MARGIN', 5)
    return ((-reach, reach), (-reach, reach))


@logged_operation
def st_bound_trend(family, a, sizes, delta, margin=None, scale=1.0, storage=None):
    '''Bound trend of the ``sqrt(delta)``-weighted discretisation.

    :param sizes: Increasing window sizes ``N``; coefficients live on
                  ``[-N/2, N/2]^2``.
    :param storage: Matrix storage, default ``TRAJECTORY_STORAGE``.
    :returns: :class:`BoundTrend`
    '''
    sizes = check_sizes(sizes)
    weight = np.sqrt(float(delta))
    storage = storage or setting('TRAJECTORY_STORAGE', 'triangular')
    estimates = []
    for size in sizes:
        points = discretize(TrajectoryWindowed(family, trajectory_box(size)), delta)
        if len(points) == 0:
            raise InvalidParameterError("the family has no line in the window of size %d" % size)
        matrix = assemble(a, scale, points, centered_window(size, 2), weights=weight,
                          storage=storage)
        estimates.append((size, estimate_bounds(matrix, margin)))
    trend = trend_from(estimates)
    info_log.info("trajectory trend of %s over %s: decay %.3g, spread %.3g",
                  family.describe(), sizes, trend.decay, trend.spread)
    return trend
