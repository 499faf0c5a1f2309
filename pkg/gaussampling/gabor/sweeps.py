'''
Frame diagnostics through translated sampling sets.

``G(g_a, Lambda x Z^2)`` is a frame exactly when every reflected translate
``-Lambda + (u, v)``, ``(u, v)`` in ``[0, 1)^2``, samples ``V^2_a``. Each
translate is again a slanted configuration, so the sweep runs the finite
section estimator of :mod:`gaussampling.frame_estimator` on a grid of
translates. A finite grid never certifies all translates; reports say
that no failing translate was found at the grid step.
'''
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import partial

import numpy as np

from gaussampling.frame_estimator.bounds import (check_sizes, estimate_bounds, samples_for,
                                                 trend_from)
from gaussampling.frame_estimator.matrices import assemble, centered_window
from gaussampling.gabor.lattices import isotropic_reduction
from gaussampling.loggers import info_log
from gaussampling.point_sets.slanted import reflect_translate
from gaussampling.utils.conf import setting
from gaussampling.utils.decorators import logged_operation
from gaussampling.utils.exceptions import InvalidParameterError, PreconditionError

MAX_STEP = 0.25


def translate_grid(step):
    '''Translates ``(i / K, j / K)`` for ``0 <= i, j <= K``, ``K = round(1 / step)``.

    Halving the step keeps every coarse translate bit for bit.
    '''
    step = float(step)
    if not 0 < step <= MAX_STEP:
        raise InvalidParameterError("translate step must lie in (0, %g], got %r" % (MAX_STEP, step))
    count = int(round(1.0 / step))
    ticks = np.arange(count + 1) / count
    uu, vv = np.meshgrid(ticks, ticks, indexing='ij')
    return np.column_stack((uu.ravel(), vv.ravel()))


def translate_estimate(config, a, shift, size, margin=None, scale=1.0):
    '''Finite section bounds of ``-Lambda + shift`` for the window of size `size`.'''
    translated = reflect_translate(config, shift)
    samples = samples_for(translated, size)
    if len(samples) == 0:
        raise PreconditionError("translate %r has no samples in the window of size %d"
                                % (tuple(shift), size))
    matrix = assemble(a, scale, samples, centered_window(size, 2))
    return estimate_bounds(matrix, margin)


@dataclass(frozen=True, eq=False)
class TranslateSweepReport:
    '''Per-translate lower and upper estimates over one grid.'''
    translates: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    step: float
    size: int
    margin: int
    a: float

    @property
    def A_est(self):
        '''The smallest lower estimate over the grid.'''
        return float(self.lower.min())

    @property
    def B_est(self):
        return float(self.upper.max())

    @property
    def argmin(self):
        return tuple(float(x) for x in self.translates[int(np.argmin(self.lower))])

    def rows(self):
        return [(float(u), float(v), float(value))
                for (u, v), value in zip(self.translates, self.lower)]

    def summary(self):
        u, v = self.argmin
        return ('no failing translate found at step %g: min A_est = %r at (%r, %r), N = %d'
                % (self.step, self.A_est, u, v, self.size))


@logged_operation
def translate_sweep(config, a, step=None, size=20, margin=None, threads=None, scale=1.0):
    '''Lower estimates of every reflected translate on the grid of `step`.

    :param config: The slanted configuration ``Lambda`` of the product
                   ``Lambda x Z^2``.
    :param threads: Worker threads; translates are independent and come
                    back in grid order whatever the count.
    :returns: :class:`TranslateSweepReport`
    '''
    step = setting('TRANSLATE_STEP', 0.1) if step is None else step
    margin = setting('INTERIOR_MARGIN', 5) if margin is None else int(margin)
    threads = int(threads or setting('DEFAULT_THREADS', 1))
    if threads < 1:
        raise InvalidParameterError("thread count must be positive, got %r" % threads)
    (size,) = check_sizes([size])
    translates = translate_grid(step)
    estimate = partial(translate_estimate, config, a, size=size, margin=margin, scale=scale)
    with ThreadPoolExecutor(max_workers=threads) as executor:
        estimates = list(executor.map(estimate, translates))
    report = TranslateSweepReport(translates,
                                  np.array([e.A_est for e in estimates]),
                                  np.array([e.B_est for e in estimates]),
                                  float(step), size, margin, float(a))
    info_log.info("sweep of %s at N=%d over %d translates: %s", config.describe(), size,
                  len(translates), report.summary())
    return report


@dataclass(frozen=True, eq=False)
class GaborTrend:
    '''Min-translate estimates for growing windows.'''
    shape: float
    config: object
    sweeps: tuple
    trend: object

    def rows(self):
        return [(row.N, row.A_est) for row in self.trend.rows]


@logged_operation
def frame_verdict_trend(spec, sizes, step=None, margin=None, threads=None):
    '''Sweeps the isotropic reduction of `spec` for every window size.

    :returns: :class:`GaborTrend`; its ``trend`` is a
              :class:`~gaussampling.frame_estimator.bounds.BoundTrend` of
              the per-size minima.
    '''
    sizes = check_sizes(sizes)
    shape, config = isotropic_reduction(spec)
    sweeps = tuple(translate_sweep(config, shape, step, size, margin, threads) for size in sizes)
    trend = trend_from([(sweep.size, sweep) for sweep in sweeps])
    info_log.info("gabor trend of %s over %s: decay %.3g, spread %.3g", spec.describe(), sizes,
                  trend.decay, trend.spread)
    return GaborTrend(shape, config, sweeps, trend)
