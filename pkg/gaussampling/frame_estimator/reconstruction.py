'''
Least-squares recovery of coefficients from samples.

When the interior block of the section has ``A_est > 0``, the interior
coefficients of a function with exact samples ``y + e`` are recovered with
error at most ``||e|| / sqrt(A_est)``.
'''
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from gaussampling.core_series.grids import CoeffGrid
from gaussampling.loggers import debug_log
from gaussampling.utils.decorators import logged_operation
from gaussampling.utils.exceptions import InvalidParameterError, RankError


@dataclass(frozen=True)
class Reconstruction:
    coeffs: CoeffGrid
    residual: float
    rank: int


@logged_operation
def reconstruct(matrix, sample_values):
    '''Minimises ``||M c - samples||_2``.

    :param matrix: A dense or sparse :class:`SamplingMatrix`.
    :param sample_values: One real or complex value per row, unweighted;
                          row weights of `matrix` are applied here.
    :returns: :class:`Reconstruction` with the coefficients on the
              coefficient window of `matrix`.
    :raises: :class:`RankError` for an all-zero matrix.
    '''
    dense = matrix.dense()
    values = np.asarray(sample_values)
    if values.shape != (dense.shape[0],):
        raise InvalidParameterError("expected %d sample values, got shape %r"
                                    % (dense.shape[0], values.shape))
    if not np.any(dense):
        raise RankError("the sampling matrix has no nonzero entry")
    if matrix.weights is not None:
        values = values * matrix.weights
    solution, _, rank, _ = linalg.lstsq(dense, values)
    residual = float(np.linalg.norm(dense @ solution - values))
    debug_log.debug("least squares: rank %d of %d, residual %.3e", rank, dense.shape[1], residual)
    shape = tuple(hi - lo + 1 for lo, hi in matrix.coeff_window)
    origin = tuple(lo for lo, _ in matrix.coeff_window)
    return Reconstruction(CoeffGrid(origin, solution.reshape(shape)), residual, int(rank))
