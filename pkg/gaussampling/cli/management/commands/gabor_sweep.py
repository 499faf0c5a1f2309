'''
Translate sweep of a Gabor lattice at one window size.
'''
from gaussampling.cli.base import ExperimentCommand
from gaussampling.cli.sources import gabor_spec_from
from gaussampling.gabor.lattices import DELTA_ABCD, density_conditions, isotropic_reduction
from gaussampling.gabor.sweeps import translate_sweep
from gaussampling.utils.conf import setting
from gaussampling.utils.exceptions import InvalidParameterError

SWEEP_HEADER = ('u', 'v', 'A_est', 'kind')


def generator_block(spec):
    '''The generator matrix as text, with its volume checked against ``c d``;
    ``None`` for a product that is not a lattice.'''
    if spec.mode == DELTA_ABCD:
        spec.check_volume()
        return spec.format_generators()
    try:
        return spec.format_generators()
    except InvalidParameterError:
        return None


def sweep_rows(report):
    rows = [(u, v, value, 'translate') for u, v, value in report.rows()]
    rows.append(report.argmin + (report.A_est, 'min'))
    return rows


class Command(ExperimentCommand):
    help = 'Lower frame estimates of every translate of a Gabor lattice on a grid.'
    explanation = ('G(g_a, Lambda x Z^2) is a frame for L^2(R^2) exactly when every '
                   'reflected translate -Lambda + (u, v) samples V^2_a. A rational '
                   'Delta_{a,b,c,d} reduces by a dilation to such a product with an '
                   'isotropic window. A finite grid of translates never certifies all of '
                   'them: the report says no failing translate was found at the step.')

    reference = ('Gaussian Gabor frames over Lambda x Z^2 and sampling by the '
                 'translates -Lambda + (u, v).')

    def run(self, config, artifacts):
        params = config.params
        spec = gabor_spec_from(params)
        shape, slanted = isotropic_reduction(spec)
        report = translate_sweep(slanted, shape, params.number('step', setting('TRANSLATE_STEP', 0.1)),
                                 params.integer('size', 20), params.integer('margin', None),
                                 config.threads)
        generators = generator_block(spec)
        artifacts.csv('gabor_sweep.csv', SWEEP_HEADER, sweep_rows(report))
        if generators is not None:
            artifacts.text('gabor_generators.txt', generators + '\n')
        artifacts.report('gabor_sweep.json', {
            'lattice': spec.describe(),
            'reduced': slanted.describe(),
            'shape': shape,
            'conditions': density_conditions(spec),
            'step': report.step,
            'size': report.size,
            'A_est': report.A_est,
            'B_est': report.B_est,
            'argmin': list(report.argmin),
            'summary': report.summary(),
        })
        return report.summary()
