'''
Seeded comparison of lifted series with their closed form.
'''
import math

import numpy as np

from gaussampling.annihilator_factory.lifts import lift_to_2d
from gaussampling.cli.base import ExperimentCommand
from gaussampling.cli.sources import box_from
from gaussampling.core_series.grids import CoeffGrid
from gaussampling.core_series.series import GaussSeriesFunction

CHECK_POINTS = 41


def check_points(box, count=CHECK_POINTS):
    '''A ``count x count`` grid over `box`, as ``(count**2, 2)`` points.'''
    (x0, x1), (y0, y1) = box
    xx, yy = np.meshgrid(np.linspace(x0, x1, count), np.linspace(y0, y1, count))
    return np.column_stack((xx.ravel(), yy.ravel()))


def lift_gap(lift, points):
    '''``|closed form - coefficient series|`` of `lift` at `points`, and the
    largest closed form value.'''
    closed = lift.closed_form(points)
    return np.abs(closed - lift.eval(points)), float(np.abs(closed).max())


class Command(ExperimentCommand):
    help = 'Compares lifted random profiles with their closed form on a grid.'
    explanation = ('The planar series sum c_n exp(-a (z - p n)^2 - a (w - q n)^2) equals '
                   'exp(a u^2 - a z^2 - a w^2) g(u / sigma), u = (p z + q w) / sigma, for the '
                   'profile g(t) = sum c_n exp(-a sigma^2 (t - n)^2). Random bounded '
                   'coefficients compare both sides on a 41 x 41 grid.')

    reference = 'Lifting identity between profiles of scale sigma and planar Gaussian series.'

    def run(self, config, artifacts):
        params = config.params
        p, q = params.integer('p', 1), params.integer('q', 2)
        a = params.number('a', 1.0)
        lo, hi = params.integers('support', [-10, 10], count=2)
        tolerance = params.number('tolerance', 1e-8)
        points = check_points(box_from(params, default=(-3.0, 3.0)))
        sigma = math.hypot(p, q)
        rng = np.random.default_rng(config.seed)
        rows = []
        for draw in range(params.integer('draws', 20)):
            coeffs = CoeffGrid((lo,), rng.uniform(-1.0, 1.0, hi - lo + 1))
            gap, peak = lift_gap(lift_to_2d(GaussSeriesFunction(a, coeffs, sigma), p, q, a),
                                 points)
            rows.append((draw, float(gap.max()), peak))
        worst = max(row[1] for row in rows)
        artifacts.csv('lift.csv', ('draw', 'max_abs_error', 'max_closed_form'), rows)
        artifacts.report('lift.json', {
            'p': p,
            'q': q,
            'a': a,
            'seed': config.seed,
            'draws': len(rows),
            'max_abs_error': worst,
            'tolerance': tolerance,
            'met': bool(worst <= tolerance),
        })
        return 'largest closed form gap %r over %d draws' % (worst, len(rows))
