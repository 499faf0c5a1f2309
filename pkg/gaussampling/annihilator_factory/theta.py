'''
The alternating theta comb

    g(x) = sum_n (-1)^n exp(-a s^2 (x - n)^2),

which vanishes on Z + 1/2 and satisfies g(x + 1) = -g(x).
'''
import math

import numpy as np

from gaussampling.core_series.grids import CoeffGrid
from gaussampling.core_series.series import GaussSeriesFunction
from gaussampling.utils.decorators import logged_operation
from gaussampling.utils.exceptions import InvalidParameterError

#: truncation level of the comb at the edge of its accurate range
COMB_TOL = 1e-15


def comb_reach(kappa):
    '''Distance beyond which a comb term is below :data:`COMB_TOL`.'''
    return math.sqrt(-math.log(COMB_TOL) / kappa)


@logged_operation
def alternating_theta(a, scale=1.0, radius=40):
    '''The comb with coefficients ``(-1)^n`` for ``|n| <= radius + reach``.

    The finite comb agrees with the infinite one to :data:`COMB_TOL` for
    ``|x| <= radius``, where ``reach`` is :func:`comb_reach`.
    '''
    kappa = a * scale * scale
    if not np.isfinite(kappa) or kappa <= 0:
        raise InvalidParameterError("a * scale^2 must be positive, got %r" % kappa)
    if radius <= 0:
        raise InvalidParameterError("radius must be positive, got %r" % radius)
    half = int(math.ceil(radius + comb_reach(kappa)))
    signs = np.where(np.arange(-half, half + 1) % 2 == 0, 1.0, -1.0)
    return GaussSeriesFunction(a, CoeffGrid((-half,), signs), scale)
