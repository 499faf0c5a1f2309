'''
Nonzero functions of V_a that vanish on a set of counting density below one.

The function is ``f(x) = exp(-kappa x^2) g(x)`` with the product ``g`` of
:mod:`.laurent`; its series coefficients are ``c_k = b_k exp(kappa k^2)``.
'''
from dataclasses import dataclass

import numpy as np

from gaussampling.annihilator_factory.laurent import laurent_coeffs, log_product
from gaussampling.core_series.series import GaussSeriesFunction
from gaussampling.loggers import accuracy_log, info_log
from gaussampling.point_sets.density import counting_bounds
from gaussampling.utils.conf import setting
from gaussampling.utils.decorators import logged_operation
from gaussampling.utils.exceptions import (AccuracyError, InfeasibleDensityError,
                                           InvalidParameterError, RangeTooSmallError)

#: share of the coefficient mass allowed in the outer fifth of the range
TAIL_SHARE = 0.01
#: default ANNIHILATOR_RESIDUAL_TOL: vanishing residual and identity
#: discrepancy, relative to the sup-norm
RESIDUAL_TOL = 1e-8
_GRID_STEP = 0.05


@dataclass(frozen=True, eq=False)
class Annihilator1D:
    '''A constructed annihilator with its construction report.'''
    function: GaussSeriesFunction
    target: object
    table: object
    bound: object
    window: tuple
    sup_norm: float
    residual: float
    identity_error: float
    failed: bool = False

    def eval(self, points):
        return self.function.eval(points)

    def report(self):
        '''Plain values for the structured run report.'''
        slope, intercept = self.table.decay_fit()
        ks = self.table.ks
        return {
            'target': self.target.describe(),
            'a': self.function.a,
            'scale': self.function.scale,
            'epsilon': self.table.epsilon,
            'rho': self.bound.rho,
            'K': self.bound.K,
            'k_range': [int(ks[0]), int(ks[-1])],
            'window': list(self.window),
            'sup_norm': self.sup_norm,
            'residual': self.residual,
            'identity_error': self.identity_error,
            'failed': self.failed,
            'decay_slope': slope,
            'decay_intercept': intercept,
            'expected_slope': -self.table.kappa / (1.0 - self.table.epsilon),
            'decay_bounded': self.table.decay_bounded(),
            'max_nodes': int(self.table.nodes.max()),
        }


def tail_fraction(values):
    '''Share of ``sum |c_k|`` carried by the outermost fifth of the indices.'''
    magnitudes = np.abs(np.asarray(values))
    side = max(1, int(round(0.1 * magnitudes.size)))
    total = magnitudes.sum()
    if total == 0:
        return 0.0
    return float((magnitudes[:side].sum() + magnitudes[-side:].sum()) / total)


@logged_operation
def build_annihilator_1d(point_set, a, epsilon=None, k_range=(-12, 12), scale=1.0, window=None,
                         threads=None):
    '''Builds the annihilator of `point_set` in the space of shape `a`.

    :param epsilon: Default ``(1 - rho) / 2`` from the measured counting bound.
    :param k_range: Coefficient indices, at least five of them.
    :param window: Where vanishing and nontriviality are checked; defaults
                   to two thirds of `k_range`.
    :raises: :class:`InfeasibleDensityError` when the measured ``rho`` is at
             least one, :class:`RangeTooSmallError` when the coefficients are
             not concentrated inside `k_range`.
    '''
    k_lo, k_hi = (int(k) for k in k_range)
    if k_hi - k_lo < 4:
        raise InvalidParameterError("k_range needs at least five indices, got (%d, %d)"
                                    % (k_lo, k_hi))
    bound = counting_bounds(point_set)
    if bound.rho >= 1.0:
        raise InfeasibleDensityError("counting slope rho = %.6g of %s is not below 1"
                                     % (bound.rho, point_set), rho=bound.rho, K=bound.K)
    table = laurent_coeffs(point_set, a, (k_lo, k_hi), epsilon, scale=scale, threads=threads,
                           bound=bound)
    coeffs = table.coefficients()
    share = tail_fraction(coeffs.values)
    if share >= TAIL_SHARE:
        raise RangeTooSmallError("%.3g of the coefficient mass sits at the ends of k_range "
                                 "(%d, %d); use a larger k_range" % (share, k_lo, k_hi),
                                 tail_fraction=share)
    function = GaussSeriesFunction(a, coeffs, scale)
    if window is None:
        window = (2.0 * k_lo / 3.0, 2.0 * k_hi / 3.0)
    lo, hi = (float(x) for x in window)

    grid = np.linspace(lo, hi, int(np.ceil((hi - lo) / _GRID_STEP)) + 1)
    values = function.eval(grid)
    sup = float(np.abs(values).max())
    if sup == 0.0:
        raise AccuracyError("the constructed function vanishes on the whole window")
    kappa = function.kappa
    direct = np.exp(log_product(point_set, kappa, grid) - kappa * grid * grid)
    identity_error = float(np.abs(values - direct).max()) / sup
    zeros = point_set.points((lo, hi))
    residual = float(np.abs(function.eval(zeros)).max()) / sup if zeros.size else 0.0

    slope, _ = table.decay_fit()
    expected = -kappa / (1.0 - table.epsilon)
    tolerance = setting('ANNIHILATOR_RESIDUAL_TOL', RESIDUAL_TOL)
    failed = residual > tolerance or identity_error > tolerance
    if failed:
        accuracy_log.warning("annihilator of %s: residual %.3e, identity error %.3e",
                             point_set, residual, identity_error)
    if np.isfinite(slope) and slope > 0.75 * expected:
        accuracy_log.warning("annihilator of %s: decay slope %.4g is slower than %.4g",
                             point_set, slope, expected)
    info_log.info("annihilator of %s: rho=%.4g eps=%.4g sup=%.4g residual=%.3e",
                  point_set, bound.rho, table.epsilon, sup, residual)
    return Annihilator1D(function, point_set, table, bound, (lo, hi), sup, residual,
                         identity_error, failed)
