'''
Minimum translate estimates of a Gabor lattice for growing windows.
'''
from gaussampling.cli.base import ExperimentCommand, target_note, trend_report, trend_target
from gaussampling.cli.management.commands.gabor_sweep import generator_block
from gaussampling.cli.sources import gabor_spec_from
from gaussampling.gabor.lattices import density_conditions
from gaussampling.gabor.sweeps import frame_verdict_trend
from gaussampling.utils.conf import setting


class Command(ExperimentCommand):
    help = 'Trend of the smallest translate estimate of a Gabor lattice over N.'
    explanation = ('Delta_{a,b,c,d} over the rational direction (p, q) gives a Gabor frame '
                   'with the Gaussian window when c < 1 and d < 1, or when c < sigma^2 and '
                   'd < sigma^-2. The smallest lower estimate over a grid of translates '
                   'stays bounded away from zero in N for such lattices and decays for '
                   'sparse ones.')

    reference = ('Gaussian Gabor frames over the rational lattices Delta_{a,b,c,d}: '
                 'c, d < 1 or c < sigma^2, d < sigma^-2.')

    def run(self, config, artifacts):
        params = config.params
        spec = gabor_spec_from(params)
        result = frame_verdict_trend(spec, params.integers('sizes', [10, 20, 40]),
                                     params.number('step', setting('TRANSLATE_STEP', 0.1)),
                                     params.integer('margin', None), config.threads)
        generators = generator_block(spec)
        artifacts.csv('gabor_trend.csv', ('N', 'min_A_est'), result.rows())
        if generators is not None:
            artifacts.text('gabor_generators.txt', generators + '\n')
        report = trend_report(result.trend)
        report.update({
            'lattice': spec.describe(),
            'reduced': result.config.describe(),
            'shape': result.shape,
            'conditions': density_conditions(spec),
            'sweeps': [sweep.summary() for sweep in result.sweeps],
        })
        target = trend_target(params, result.trend)
        if target is not None:
            report['target'] = target
        artifacts.report('gabor_trend.json', report)
        return 'decay %r, spread %r; %s%s' % (result.trend.decay, result.trend.spread,
                                             result.sweeps[-1].summary(), target_note(target))
