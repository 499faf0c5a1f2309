'''
Nonzero functions of V_a vanishing on a sparse 1D set.
'''
from gaussampling.annihilator_factory.construction import build_annihilator_1d
from gaussampling.cli.base import ExperimentCommand
from gaussampling.core_series.serializers import dumps
from gaussampling.utils.exceptions import AccuracyError


class Command(ExperimentCommand):
    help = 'Builds the product annihilator of a set with counting density below one.'
    explanation = ('When #Gamma in [0, r) and #Gamma in (-r, 0) stay below rho r + K with '
                   'rho < 1, the product of the zero-placing factors over Gamma has '
                   'Laurent coefficients decaying like exp(-a k^2 / (1 - eps)), which '
                   'gives a nonzero function of V_a vanishing on Gamma.')

    reference = ('Nonzero functions of V_a vanishing on sets with counting function '
                 'below rho r + K, rho < 1, built as infinite products.')

    def run(self, config, artifacts):
        params = config.params
        target = params.descriptor('target')
        result = build_annihilator_1d(target, params.number('a'), params.number('epsilon', None),
                                      params.integers('k_range', [-12, 12], count=2),
                                      params.number('scale', 1.0), threads=config.threads)
        grid = result.function.coeffs
        artifacts.csv('annihilator.csv', ('k', 'c_k'), zip(grid.indices()[0], grid.values))
        artifacts.text('annihilator.txt', dumps(result.function))
        artifacts.report('annihilator.json', result.report())
        if result.failed:
            raise AccuracyError('residual %.3e, identity error %.3e above tolerance'
                                % (result.residual, result.identity_error),
                                residual=result.residual)
        return 'residual %r of sup %r on %s' % (result.residual, result.sup_norm,
                                               target.describe())
