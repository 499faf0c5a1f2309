'''
The product with prescribed zeros and its Laurent coefficients.

For a separated set ``Gamma`` and ``kappa = a * scale**2``

    g(z) = prod_{gamma >= 0} (1 - exp(2 kappa (z - gamma)))
           prod_{gamma < 0}  (1 - exp(-2 kappa (z - gamma)))

vanishes exactly on ``Gamma``. In the variable ``w = exp(2 kappa z)`` it is a
Laurent series ``h(w) = sum_k b_k w^k``; the coefficient ``b_k`` is the mean
of ``h(w) w^-k`` over the circle ``|w| = exp(2 kappa k / (1 - eps))``.

All products are accumulated as sums of logarithms, and every contour mean
is kept as a mantissa times ``exp(peak)`` so that neither overflows.
'''
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from gaussampling.core_series.grids import CoeffGrid
from gaussampling.loggers import accuracy_log, debug_log
from gaussampling.point_sets.density import counting_bounds
from gaussampling.utils.conf import setting
from gaussampling.utils.decorators import logged_operation
from gaussampling.utils.exceptions import (AccuracyError, InvalidParameterError,
                                           UnsupportedDomainError)

#: largest |Re z| accepted by :func:`product_g`
PRODUCT_REAL_LIMIT = 1000.0
_EPS = np.finfo(float).eps
_BLOCK = 4096


def _log_one_minus_exp(v):
    '''``log(1 - exp(v))`` without cancellation or overflow.'''
    result = np.empty_like(v)
    left = v.real <= 0
    with np.errstate(divide='ignore', invalid='ignore'):
        result[left] = np.log(-np.expm1(v[left]))
        right = ~left
        result[right] = v[right] + np.log(np.expm1(-v[right]))
    return result


def log_product(point_set, kappa, z):
    '''``log g(z)`` for an array of complex `z`, up to multiples of 2 pi i.

    Factors are kept for ``gamma`` in ``[min(0, x) - M, max(0, x) + M]``
    with ``M = PRODUCT_TAIL / (2 kappa)``; the others differ from one by
    less than ``exp(-PRODUCT_TAIL)``.
    '''
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    real = z.real
    if real.size and np.max(np.abs(real)) > PRODUCT_REAL_LIMIT:
        raise UnsupportedDomainError("|Re z| must not exceed %g" % PRODUCT_REAL_LIMIT)
    reach = setting('PRODUCT_TAIL', 40.0) / (2.0 * kappa)
    lo = min(0.0, float(real.min(initial=0.0))) - reach
    hi = max(0.0, float(real.max(initial=0.0))) + reach
    gammas = point_set.points((lo, hi))
    signs = np.where(gammas >= 0, 1.0, -1.0)
    out = np.zeros(z.shape, dtype=complex)
    if gammas.size == 0:
        return out
    for start in range(0, z.size, _BLOCK):
        block = z[start:start + _BLOCK]
        v = 2.0 * kappa * signs[None, :] * (block[:, None] - gammas[None, :])
        out[start:start + _BLOCK] = _log_one_minus_exp(v).sum(axis=1)
    return out


@logged_operation
def product_g(point_set, a, z, scale=1.0):
    '''The zero-prescribing product ``g`` at `z` (scalar or array).

    :raises: :class:`UnsupportedDomainError` for ``|Re z|`` above
             :data:`PRODUCT_REAL_LIMIT`.
    '''
    kappa = a * scale * scale
    if not np.isfinite(kappa) or kappa <= 0:
        raise InvalidParameterError("a * scale^2 must be positive, got %r" % kappa)
    values = np.exp(log_product(point_set, kappa, z))
    return complex(values[0]) if np.ndim(z) == 0 else values


@dataclass(frozen=True, eq=False)
class LaurentCoeffTable:
    '''``b_k = mantissa_k * exp(log_peak_k)`` for ``k`` in `ks`.

    ``log_radii`` are ``ln R_k``, ``nodes`` the accepted node counts and
    ``changes`` the last doubling change relative to ``exp(log_peak_k)``.
    '''
    ks: np.ndarray
    mantissas: np.ndarray
    log_peaks: np.ndarray
    log_radii: np.ndarray
    nodes: np.ndarray
    changes: np.ndarray
    epsilon: float
    a: float
    scale: float = 1.0

    @property
    def kappa(self):
        return self.a * self.scale * self.scale

    @property
    def values(self):
        with np.errstate(under='ignore'):
            return self.mantissas * np.exp(self.log_peaks)

    def get(self, k):
        position = int(k) - int(self.ks[0])
        if not 0 <= position < len(self.ks):
            return 0.0
        return self.values[position]

    def log_magnitudes(self):
        '''``ln |b_k|``; ``-inf`` for coefficients that came out exactly zero.'''
        with np.errstate(divide='ignore'):
            return np.log(np.abs(self.mantissas)) + self.log_peaks

    def decay_diagnostic(self):
        '''``|b_k| exp(kappa k^2 / (1 - eps))``; bounded when the coefficients
        decay at the guaranteed rate.'''
        exponent = self.log_magnitudes() + self.kappa * self.ks ** 2 / (1.0 - self.epsilon)
        with np.errstate(over='ignore'):
            return np.exp(exponent)

    def decay_bounded(self, factor=10.0):
        '''Whether the decay diagnostic stays within `factor` times its median.'''
        diagnostic = self.decay_diagnostic()
        finite = diagnostic[np.isfinite(diagnostic) & (diagnostic > 0)]
        if finite.size == 0:
            return True
        return bool(finite.max() <= factor * np.median(finite))

    def decay_fit(self):
        '''``(slope, intercept)`` of ``ln|b_k|`` against ``k^2``.'''
        logs = self.log_magnitudes()
        keep = np.isfinite(logs)
        if np.count_nonzero(keep) < 2:
            return (float('nan'), float('nan'))
        slope, intercept = np.polyfit(self.ks[keep].astype(float) ** 2, logs[keep], 1)
        return (float(slope), float(intercept))

    def coefficients(self):
        '''The series coefficients ``c_k = b_k exp(kappa k^2)`` on ``ks``.

        The coefficients of a real set are real, so only the real part of
        the contour means is kept.
        '''
        exponent = self.log_peaks + self.kappa * self.ks.astype(float) ** 2
        with np.errstate(under='ignore'):
            values = self.mantissas.real * np.exp(exponent)
        return CoeffGrid((int(self.ks[0]),), values)


def _contour_mean(point_set, kappa, k, log_radius, nodes):
    '''``(mantissa, log_peak)`` of the mean of ``h(w) w^-k`` over ``nodes``
    equispaced points of the circle.'''
    log_w = log_radius + 2j * np.pi * np.arange(nodes) / nodes
    exponent = log_product(point_set, kappa, log_w / (2.0 * kappa)) - k * log_w
    peak = float(np.max(exponent.real))
    if not np.isfinite(peak):
        return 0j, 0.0
    with np.errstate(under='ignore'):
        mantissa = np.mean(np.exp(exponent - peak))
    return complex(mantissa), peak


def _coefficient(point_set, kappa, k, log_radius, first_nodes, max_nodes, rtol, fail_rtol):
    floor = 64.0 * _EPS
    nodes = first_nodes
    mantissa, peak = _contour_mean(point_set, kappa, k, log_radius, nodes)
    history = [nodes]
    change = np.inf
    while True:
        doubled = 2 * nodes
        if doubled > max_nodes:
            break
        finer, finer_peak = _contour_mean(point_set, kappa, k, log_radius, doubled)
        history.append(doubled)
        coarse = mantissa * math.exp(peak - finer_peak)
        change = abs(finer - coarse)
        mantissa, peak, nodes = finer, finer_peak, doubled
        if change <= rtol * abs(finer) + floor:
            return mantissa, peak, nodes, change
    if change <= fail_rtol * abs(mantissa) + floor:
        accuracy_log.warning("b_%d accepted at the node cap %d with change %.3e", k, nodes, change)
        return mantissa, peak, nodes, change
    raise AccuracyError("contour quadrature for b_%d did not converge within %d nodes" % (k, nodes),
                        k=k, node_history=history, change=change)


@logged_operation
def laurent_coeffs(point_set, a, k_range, epsilon=None, nodes_per_circle=None, scale=1.0,
                   threads=None, bound=None):
    '''Contour-averaged Laurent coefficients of the product of `point_set`.

    :param k_range: ``(k_lo, k_hi)`` inclusive.
    :param epsilon: Slack in ``(0, 1 - rho)``, where ``rho`` is the measured
                    counting slope; default ``(1 - rho) / 2``.
    :param nodes_per_circle: Initial node count, at least 256; doubled until
                             the change drops below ``LAURENT_RTOL``.
    :param bound: A precomputed :class:`CountingBound` of `point_set`.
    :returns: :class:`LaurentCoeffTable`
    :raises: :class:`AccuracyError` when doubling up to
             ``LAURENT_MAX_NODES`` still changes a coefficient by more than
             ``LAURENT_FAIL_RTOL``.
    '''
    kappa = a * scale * scale
    if not np.isfinite(kappa) or kappa <= 0:
        raise InvalidParameterError("a * scale^2 must be positive, got %r" % kappa)
    k_lo, k_hi = (int(k) for k in k_range)
    if k_hi < k_lo:
        raise InvalidParameterError("empty k range (%d, %d)" % (k_lo, k_hi))
    bound = bound or counting_bounds(point_set)
    if epsilon is None:
        epsilon = (1.0 - bound.rho) / 2.0
    if not 0.0 < epsilon < 1.0 - bound.rho:
        raise InvalidParameterError("epsilon must lie in (0, 1 - rho) = (0, %.6g), got %r"
                                    % (1.0 - bound.rho, epsilon))
    nodes = int(nodes_per_circle or setting('LAURENT_NODES', 256))
    if nodes < 256:
        raise InvalidParameterError("at least 256 nodes per circle are needed, got %d" % nodes)
    max_nodes = setting('LAURENT_MAX_NODES', 2 ** 18)
    rtol = setting('LAURENT_RTOL', 1e-10)
    fail_rtol = setting('LAURENT_FAIL_RTOL', 1e-8)
    ks = np.arange(k_lo, k_hi + 1)
    log_radii = 2.0 * kappa * ks / (1.0 - epsilon)

    def solve(item):
        k, log_radius = item
        return _coefficient(point_set, kappa, int(k), float(log_radius), nodes, max_nodes,
                            rtol, fail_rtol)

    workers = int(threads or setting('DEFAULT_THREADS', 1))
    with ThreadPoolExecutor(max_workers=max(workers, 1)) as pool:
        results = list(pool.map(solve, zip(ks, log_radii)))
    mantissas, peaks, used, changes = (np.array(column) for column in zip(*results))
    accuracy_log.info("laurent coefficients k=%d..%d for %s: eps=%.4g, nodes up to %d",
                      k_lo, k_hi, point_set, epsilon, used.max())
    debug_log.debug("laurent doubling changes: %s", changes)
    return LaurentCoeffTable(ks, mantissas.astype(complex), peaks.astype(float), log_radii,
                             used.astype(int), changes.astype(float), float(epsilon),
                             float(a), float(scale))
