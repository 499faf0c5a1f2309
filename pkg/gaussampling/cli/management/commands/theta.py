'''
The alternating Gaussian comb and the critical slanted counterexamples.
'''
import math

import numpy as np

from gaussampling.annihilator_factory.lifts import critical_configs, critical_counterexamples
from gaussampling.annihilator_factory.theta import alternating_theta
from gaussampling.cli.base import ExperimentCommand
from gaussampling.cli.sources import interval_from
from gaussampling.core_series.series import sup_norm_estimate
from gaussampling.point_sets.slanted import build_slanted

_GRID_STEP = 0.05


class Command(ExperimentCommand):
    help = 'Zeros of the alternating comb; with p and q, the critical counterexamples.'
    explanation = ('sum_n (-1)^n exp(-a (x - n)^2) vanishes exactly on Z + 1/2. Lifted '
                   'along (p, q) it vanishes on the slanted configurations over '
                   'sigma^2 (Z + 1/2) and over Z + 1/2, whose densities sit on the '
                   'critical boundary; so these are not uniqueness sets.')

    reference = ('Critical slanted configurations that are not uniqueness sets, '
                 'through the alternating Gaussian comb.')

    def run(self, config, artifacts):
        params = config.params
        a = params.number('a')
        lo, hi = interval_from(params, default=(-3.0, 3.0))
        comb = alternating_theta(a, params.number('scale', 1.0), params.number('radius', 40))
        sup = sup_norm_estimate(comb, (lo, hi), _GRID_STEP)
        zeros = np.arange(math.ceil(lo - 0.5), math.floor(hi - 0.5) + 1) + 0.5
        values = np.abs(comb.eval(zeros))
        artifacts.csv('theta.csv', ('x', 'abs_g'), zip(zeros, values))
        report = {
            'a': a,
            'scale': comb.scale,
            'window': [lo, hi],
            'sup_norm': sup,
            'zero_residual': float(values.max()) / sup,
        }
        if 'p' in params:
            report['critical'] = self._critical(params, a, ((lo, hi), (lo, hi)))
        artifacts.report('theta.json', report)
        return 'max |g| on Z + 1/2 is %r of the sup-norm' % report['zero_residual']

    def _critical(self, params, a, box):
        p, q = params.integer('p'), params.integer('q')
        lifts = critical_counterexamples(p, q, a)
        configs = critical_configs(p, q, params.descriptor('gamma1', 'prog 1 0'),
                                   params.descriptor('gamma2', 'prog 1 0'))
        results = []
        for lift, slanted in zip(lifts, configs):
            points = build_slanted(slanted, box)
            sup = sup_norm_estimate(lift.series, box, _GRID_STEP)
            residual = float(np.abs(lift.eval(points)).max()) / sup if len(points) else 0.0
            results.append({'config': slanted.describe(), 'points': len(points),
                            'sup_norm': sup, 'residual': residual})
        return results
