'''
Windowed Beurling densities of a 1D point set.
'''
from gaussampling.cli.base import ExperimentCommand
from gaussampling.point_sets.density import beurling_density, counting_bounds, separation
from gaussampling.utils.conf import setting
from gaussampling.utils.exceptions import UndefinedSeparationError


class Command(ExperimentCommand):
    help = 'Lower and upper Beurling densities, separation and counting bound of a set.'
    explanation = ('D-(Gamma) and D+(Gamma) are the limits of the least and largest '
                   'count per unit length over windows of growing length R. The table '
                   'lists every R; the final row is the closed form limit when the '
                   'descriptor knows it. Also reported: the separation and the '
                   'counting bound max(#Gamma in [0, r), #Gamma in (-r, 0)) <= rho r + K.')

    reference = 'Beurling lower and upper densities of uniformly discrete sets on the line.'

    def run(self, config, artifacts):
        params = config.params
        point_set = params.descriptor('set')
        radii = params.numbers('radii', setting('DENSITY_RADII', [25, 50, 100, 200]))
        estimate = beurling_density(point_set, radii)
        bound = counting_bounds(point_set)
        window = (-max(radii), max(radii))
        try:
            gap = separation(point_set, window)
        except UndefinedSeparationError:
            gap = None
        rows = [('window', row.radius, row.lower, row.upper, False) for row in estimate.table]
        rows.append(('limit', max(radii), estimate.lower, estimate.upper, estimate.exact))
        artifacts.csv('density.csv', ('kind', 'R', 'lower', 'upper', 'exact'), rows)
        artifacts.report('density.json', {
            'set': point_set.describe(),
            'lower': estimate.lower,
            'upper': estimate.upper,
            'exact': estimate.exact,
            'separation': gap,
            'rho': bound.rho,
            'K': bound.K,
        })
        return 'D- = %r, D+ = %r%s' % (estimate.lower, estimate.upper,
                                      ' (exact)' if estimate.exact else '')
