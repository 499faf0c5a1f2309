'''
Recovers a Gaussian series from its samples on a point set.
'''
import numpy as np

from gaussampling.cli.base import ExperimentCommand
from gaussampling.cli.sources import source_from
from gaussampling.core_series.serializers import dumps, loads
from gaussampling.core_series.series import GaussSeriesFunction
from gaussampling.frame_estimator.bounds import samples_for
from gaussampling.frame_estimator.matrices import assemble, centered_window
from gaussampling.frame_estimator.reconstruction import reconstruct
from gaussampling.utils.exceptions import InvalidParameterError


class Command(ExperimentCommand):
    help = 'Samples a stored series on a set, adds seeded noise and solves least squares.'
    explanation = ('On a sampling set the coefficients of f in V_a are determined by the '
                   'samples, stably: the least squares solution of the finite section '
                   'moves by at most ||noise|| / sqrt(A_est).')

    reference = ('Stable recovery of the coefficients of f in V_a from its values on a '
                 'sampling set.')

    def run(self, config, artifacts):
        params = config.params
        with open(params.path('coeffs'), encoding='utf-8') as fio:
            truth = loads(fio.read())
        source = source_from(params)
        size = params.integer('size', 20)
        window = centered_window(size, truth.dim)
        samples = samples_for(source, size)
        if np.ndim(samples) != truth.dim:
            raise InvalidParameterError("a %dD series needs a %dD set" % (truth.dim, truth.dim))
        if len(samples) == 0:
            raise InvalidParameterError("%s has no samples in the window" % source.describe())
        noise = params.number('noise', 0.0)
        rng = np.random.default_rng(config.seed)
        values = truth.eval(samples) + noise * rng.standard_normal(len(samples))
        matrix = assemble(truth.a, truth.scale, samples, window)
        result = reconstruct(matrix, values)
        recovered = GaussSeriesFunction(truth.a, result.coeffs, truth.scale)
        try:
            error = float(np.max(np.abs(truth.coeffs.padded(window).values
                                        - result.coeffs.values)))
        except InvalidParameterError:
            # the stored support leaves the window
            error = None
        artifacts.text('reconstruct.txt', dumps(recovered))
        artifacts.report('reconstruct.json', {
            'source': source.describe(),
            'rows': len(samples),
            'window': [list(row) for row in window],
            'noise': noise,
            'seed': config.seed,
            'residual': result.residual,
            'rank': result.rank,
            'coefficient_error': error,
        })
        return 'rank %d, residual %r, coefficient error %r' % (result.rank, result.residual, error)
