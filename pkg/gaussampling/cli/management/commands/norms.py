'''
Norm equivalence on V_a and single-atom line integrals.
'''
import math

import numpy as np

from gaussampling.cli.base import ExperimentCommand
from gaussampling.core_series.grids import CoeffGrid
from gaussampling.core_series.series import GaussSeriesFunction, lp_norm_equivalence_check
from gaussampling.point_sets.descriptors import Progression
from gaussampling.point_sets.slanted import LineFamily
from gaussampling.trajectory.windowed import TrajectoryWindowed, line_integral_p

_LINE_BOX = ((-6.0, 6.0), (-6.0, 6.0))


def atom_line_integrals(a):
    '''``int exp(-2 a |x|^2) ds`` along ``x = 0`` and ``x = 1`` against the
    closed forms ``sqrt(pi / (2 a))`` and ``exp(-2 a) sqrt(pi / (2 a))``.'''
    atom = GaussSeriesFunction(a, CoeffGrid.single((0, 0)))
    closed = math.sqrt(math.pi / (2.0 * a))
    rows = []
    for offset in (0.0, 1.0):
        family = LineFamily.rational(1, 0, Progression(100.0, offset))
        value = line_integral_p(atom, TrajectoryWindowed(family, _LINE_BOX), 2)
        expected = math.exp(-2.0 * a * offset * offset) * closed
        rows.append((offset, value, expected, abs(value - expected) / expected))
    return rows


class Command(ExperimentCommand):
    help = 'Seeded check that ||f||_p and ||c||_p stay comparable on V_a.'
    explanation = ('On V_a the L^p norm of f = sum c_n exp(-a (x - n)^2) is comparable '
                   'to the l^p norm of c, with constants depending only on a and p. '
                   'Random coefficient draws give ratios in a bounded band; single atoms '
                   'have closed form line integrals.')

    reference = 'Norm equivalence ||f||_p ~ ||c||_p on V_a.'

    def run(self, config, artifacts):
        params = config.params
        a = params.number('a', 1.0)
        p = params.number('p', 2.0)
        lo, hi = params.integers('support', [-5, 5], count=2)
        rng = np.random.default_rng(config.seed)
        ratios = []
        for draw in range(params.integer('draws', 50)):
            coeffs = rng.standard_normal(hi - lo + 1)
            f = GaussSeriesFunction(a, CoeffGrid((lo,), coeffs, p))
            ratios.append((draw, lp_norm_equivalence_check(f, p).ratio))
        values = [ratio for _, ratio in ratios]
        lines = atom_line_integrals(a)
        artifacts.csv('norms.csv', ('draw', 'ratio'), ratios)
        artifacts.csv('line_integrals.csv', ('offset', 'value', 'expected', 'relative_error'),
                      lines)
        artifacts.report('norms.json', {
            'a': a,
            'p': p,
            'seed': config.seed,
            'min_ratio': min(values),
            'max_ratio': max(values),
            'spread': max(values) / min(values),
            'max_line_error': max(row[3] for row in lines),
        })
        return 'ratio spread %r, line integral error %r' % (max(values) / min(values),
                                                           max(row[3] for row in lines))
