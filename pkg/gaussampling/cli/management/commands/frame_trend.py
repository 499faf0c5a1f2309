'''
Finite section frame bounds of a sampling set for growing windows.
'''
from gaussampling.cli.base import (TREND_HEADER, ExperimentCommand, target_note, trend_report,
                                   trend_rows, trend_target)
from gaussampling.cli.sources import source_from
from gaussampling.frame_estimator.bounds import bound_trend
from gaussampling.point_sets.slanted import SlantedConfig, density_regime


class Command(ExperimentCommand):
    help = 'A_est and B_est of a 1D set or slanted configuration for growing N.'
    explanation = ('A set samples V_a when A ||c||^2 <= sum |f(lambda)|^2 <= B ||c||^2 '
                   'for every coefficient sequence c. The finite section on [-N/2, N/2]^d '
                   'estimates A and B by the extreme singular values over interior '
                   'coefficients. A_est stable in N suggests sampling; A_est decaying '
                   'geometrically suggests failure. Both are diagnostics, not proofs.')

    reference = ('Sampling inequalities for V_a: the integers sample V_a, the integers '
                 'without zero do not.')

    def run(self, config, artifacts):
        params = config.params
        source = source_from(params)
        a = params.number('a')
        trend = bound_trend(source, a, params.integers('sizes', [10, 20, 40]),
                            params.integer('margin', None), params.number('scale', 1.0))
        artifacts.csv('frame_trend.csv', TREND_HEADER, trend_rows(trend))
        report = trend_report(trend)
        report.update({'source': source.describe(), 'a': a})
        if isinstance(source, SlantedConfig):
            report['regime'] = density_regime(source)
        target = trend_target(params, trend)
        if target is not None:
            report['target'] = target
        artifacts.report('frame_trend.json', report)
        return 'decay %r, spread %r over N = %s%s' % (trend.decay, trend.spread, report['sizes'],
                                                      target_note(target))
