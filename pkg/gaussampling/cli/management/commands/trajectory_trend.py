'''
Frame bound trends of discretised line families.
'''
from gaussampling.cli.base import (TREND_HEADER, ExperimentCommand, target_note, trend_report,
                                   trend_rows, trend_target)
from gaussampling.cli.sources import family_from
from gaussampling.trajectory.annihilation import trajectory_regime
from gaussampling.trajectory.discretization import st_bound_trend


class Command(ExperimentCommand):
    help = 'Bound trend of a line family discretised at spacing delta.'
    explanation = ('Lines of irrational slope with offsets Gamma are a sampling '
                   'trajectory for V^2_a exactly when D-(Gamma) > 0. For a rational '
                   'slope (p, q) they are one when D-(Gamma) > 1 / sigma and are not '
                   'when D+(Gamma) < 1 / sigma. Points spaced delta along the lines, '
                   'weighted by sqrt(delta), inherit the frame property for small delta.')

    reference = ('Sampling trajectories of parallel lines: D-(Gamma) > 0 for '
                 'irrational slopes, 1 / sigma as threshold for rational slopes.')

    def run(self, config, artifacts):
        params = config.params
        family = family_from(params)
        a = params.number('a')
        delta = params.number('delta', 0.1)
        trend = st_bound_trend(family, a, params.integers('sizes', [10, 20, 40]), delta,
                               params.integer('margin', None), params.number('scale', 1.0))
        regime = trajectory_regime(family)
        artifacts.csv('trajectory_trend.csv', TREND_HEADER, trend_rows(trend))
        report = trend_report(trend)
        report.update({'family': family.describe(), 'a': a, 'delta': delta, 'regime': regime})
        target = trend_target(params, trend)
        if target is not None:
            report['target'] = target
        artifacts.report('trajectory_trend.json', report)
        return '%s: decay %r, spread %r%s' % (regime, trend.decay, trend.spread,
                                              target_note(target))
