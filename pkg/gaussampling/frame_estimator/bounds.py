'''
Lower and upper sampling constants of finite sections.

Both constants use the squared convention of the sampling inequality
``A ||c||^2 <= sum |f(lambda)|^2 <= B ||c||^2``:

* ``B_est`` is the largest squared singular value of the whole section;
* ``A_est`` is the smallest squared singular value of the columns whose
  indices lie at least ``interior_margin`` steps inside the coefficient
  window, with all rows kept.

Neither is a verdict on the infinite problem; trends over growing windows
are reported instead.
'''
from dataclasses import dataclass, field

import numpy as np
from scipy import linalg
from scipy.sparse import linalg as sparse_linalg

from gaussampling.frame_estimator.matrices import (DENSE, GRAM, SPARSE, TRIANGULAR,
                                                   assemble, centered_window)
from gaussampling.loggers import accuracy_log, info_log
from gaussampling.point_sets.slanted import SlantedConfig, build_slanted
from gaussampling.utils.conf import setting
from gaussampling.utils.decorators import logged_operation
from gaussampling.utils.exceptions import InvalidParameterError, PreconditionError


@dataclass(frozen=True)
class FrameBoundsEstimate:
    '''``A_est <= B_est`` of one finite section.'''
    A_est: float
    B_est: float
    interior_window: tuple
    method: str
    rows: int
    columns: int
    diagnostics: dict = field(default_factory=dict)

    @property
    def condition(self):
        return self.B_est / self.A_est if self.A_est > 0 else np.inf


def _coverage(matrix, margin):
    '''Axes along which the samples do not reach the inflated window.'''
    short = []
    for axis, (lo, hi) in enumerate(matrix.coeff_window):
        coords = matrix.samples[:, axis]
        if coords.min() > lo - margin + 1.0 or coords.max() < hi + margin - 1.0:
            short.append(axis)
    return short


def _dense_bounds(dense, interior):
    '''Also takes the triangular factor, which has the same singular values.'''
    largest = linalg.svdvals(dense)[0]
    smallest = linalg.svdvals(dense[:, interior])[-1]
    if dense.shape[0] < len(interior):
        smallest = 0.0
    return smallest ** 2, largest ** 2, {}


def _gram_bounds(gram, interior):
    largest = linalg.eigvalsh(gram, subset_by_index=[gram.shape[0] - 1, gram.shape[0] - 1])[0]
    block = gram[np.ix_(interior, interior)]
    smallest = linalg.eigvalsh(block, subset_by_index=[0, 0])[0]
    return max(smallest, 0.0), largest, {}


def _sparse_bounds(matrix, interior):
    tol = setting('ITERATIVE_SVD_TOL', 1e-8)
    top = sparse_linalg.svds(matrix, k=1, tol=tol, return_singular_vectors=False)
    block = matrix[:, interior]
    gram = (block.T @ block).tocsc()
    try:
        values, vectors = sparse_linalg.eigsh(gram, k=1, sigma=0.0, which='LM', tol=tol)
    except RuntimeError:
        # singular interior Gram matrix; the lower bound is numerically zero
        return 0.0, float(top[0]) ** 2, {'residual': None}
    residual = float(np.linalg.norm(gram @ vectors[:, 0] - values[0] * vectors[:, 0]))
    accuracy_log.info("iterative bounds: lambda_min=%.3e residual=%.3e", values[0], residual)
    return max(float(values[0]), 0.0), float(top[0]) ** 2, {'residual': residual}


@logged_operation
def estimate_bounds(matrix, interior_margin=None):
    '''Estimates ``A_est`` and ``B_est`` of a :class:`SamplingMatrix`.

    :param interior_margin: Integer steps between the interior block and the
                            edge of the coefficient window; default
                            ``INTERIOR_MARGIN``.
    :raises: :class:`PreconditionError` when the interior is empty.
    '''
    margin = setting('INTERIOR_MARGIN', 5) if interior_margin is None else int(interior_margin)
    if margin < 0:
        raise InvalidParameterError("interior margin must be nonnegative, got %d" % margin)
    interior = matrix.interior_columns(margin)
    if interior.size == 0:
        raise PreconditionError("coefficient window %r has no columns %d steps inside"
                                % (matrix.coeff_window, margin), interior_margin=margin)
    if matrix.margin:
        short = _coverage(matrix, matrix.margin)
        if short:
            info_log.warning("samples do not cover the coefficient window plus %s along axes %s",
                             matrix.margin, short)
    if matrix.storage in (DENSE, TRIANGULAR):
        lower, upper, extra = _dense_bounds(matrix.data, interior)
    elif matrix.storage == SPARSE:
        lower, upper, extra = _sparse_bounds(matrix.data, interior)
    elif matrix.storage == GRAM:
        lower, upper, extra = _gram_bounds(matrix.data, interior)
    else:
        raise InvalidParameterError("unknown storage %r" % matrix.storage)
    lower = min(lower, upper)
    interior_window = tuple((lo + margin, hi - margin) for lo, hi in matrix.coeff_window)
    rows, columns = matrix.shape
    return FrameBoundsEstimate(float(lower), float(upper), interior_window, matrix.storage,
                               rows, columns, extra)


@dataclass(frozen=True)
class TrendRow:
    N: int
    A_est: float
    B_est: float
    ratio_prev: float


@dataclass(frozen=True)
class BoundTrend:
    '''Rows of a trend plus the consecutive-ratio diagnostics.

    ``ratio_prev`` of a row is ``A_est`` of the previous row divided by its
    own ``A_est``, so values above one mean decay.
    '''
    rows: tuple

    @property
    def max_ratio(self):
        ratios = [row.ratio_prev for row in self.rows[1:]]
        return max(ratios) if ratios else 1.0

    @property
    def decay(self):
        '''``A_est`` of the first row over ``A_est`` of the last.'''
        first, last = self.rows[0].A_est, self.rows[-1].A_est
        return first / last if last > 0 else np.inf

    @property
    def spread(self):
        '''Largest over smallest ``A_est``.'''
        values = [row.A_est for row in self.rows]
        return max(values) / min(values) if min(values) > 0 else np.inf

    def strictly_decreasing(self):
        return all(b.A_est < a.A_est for a, b in zip(self.rows, self.rows[1:]))


def trend_from(estimates):
    '''Builds a :class:`BoundTrend` from ``(N, FrameBoundsEstimate)`` pairs.'''
    rows = []
    previous = None
    for size, estimate in estimates:
        if previous is None:
            ratio = np.nan
        elif estimate.A_est > 0:
            ratio = previous / estimate.A_est
        else:
            ratio = np.inf
        rows.append(TrendRow(int(size), estimate.A_est, estimate.B_est, ratio))
        previous = estimate.A_est
    return BoundTrend(tuple(rows))


def check_sizes(sizes):
    sizes = [int(n) for n in sizes]
    if not sizes:
        raise InvalidParameterError("at least one window size is needed")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise InvalidParameterError("window sizes must increase, got %r" % sizes)
    if sizes[0] <= 0:
        raise InvalidParameterError("window sizes must be positive")
    return sizes


def samples_for(source, size):
    '''Sample points of `source` in the box ``[-N/2 - M, N/2 + M]^d``, where
    ``M`` is ``SAMPLE_MARGIN``.'''
    reach = size / 2.0 + setting('SAMPLE_MARGIN', 5)
    if isinstance(source, SlantedConfig):
        return build_slanted(source, ((-reach, reach), (-reach, reach)))
    return source.points((-reach, reach))


@logged_operation
def bound_trend(source, a, sizes, margin=None, scale=1.0):
    '''``A_est`` and ``B_est`` for growing coefficient windows.

    :param source: A :class:`PointSet1D` (1D) or :class:`SlantedConfig` (2D).
    :param sizes: At least three increasing window sizes ``N``; the
                  coefficient window is ``[-N/2, N/2]^d``.
    :returns: :class:`BoundTrend`
    '''
    sizes = check_sizes(sizes)
    if len(sizes) < 3:
        raise InvalidParameterError("a trend needs at least three window sizes")
    estimates = []
    for size in sizes:
        samples = samples_for(source, size)
        dim = 1 if samples.ndim == 1 else 2
        if len(samples) == 0:
            raise PreconditionError("no samples in the window of size %d" % size)
        matrix = assemble(a, scale, samples, centered_window(size, dim))
        estimates.append((size, estimate_bounds(matrix, margin)))
    trend = trend_from(estimates)
    info_log.info("bound trend over %s: decay %.3g, spread %.3g", sizes, trend.decay, trend.spread)
    return trend
