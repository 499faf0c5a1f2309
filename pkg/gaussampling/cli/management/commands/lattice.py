'''
Points of a slanted configuration in a box, with its density regime.
'''
from gaussampling.cli.base import ExperimentCommand
from gaussampling.cli.sources import box_from, slanted_from
from gaussampling.point_sets.slanted import build_slanted, density_regime, enclosing_lines
from gaussampling.trajectory.discretization import min_separation


class Command(ExperimentCommand):
    help = 'Lists a slanted configuration in a box and labels its density regime.'
    explanation = ('Lambda(p, q, Gamma1, Gamma2) is the rotation by (p, q) / sigma of '
                   'Gamma1 / sigma x sigma Gamma2. Both lower densities above one, or '
                   'D(Gamma1) > sigma^-2 with D(Gamma2) > sigma^2, make it a sampling set; '
                   'D(Gamma1) < sigma^-2, D(Gamma2) < 1 or D(Gamma1) D(Gamma2) < 1 rule it out.')

    reference = ('Sampling characterisation of slanted configurations Lambda(p, q, '
                 'Gamma1, Gamma2) by the densities of Gamma1 and Gamma2.')

    def run(self, config, artifacts):
        params = config.params
        slanted = slanted_from(params)
        window = box_from(params)
        points = build_slanted(slanted, window)
        coordinates = slanted.coordinates(points)
        artifacts.csv('lattice.csv', ('x', 'y', 'gamma1', 'gamma2'),
                      [tuple(point) + tuple(coords) for point, coords in zip(points, coordinates)])
        regime = density_regime(slanted)
        artifacts.report('lattice.json', {
            'config': slanted.describe(),
            'window': [list(row) for row in window],
            'count': len(points),
            'min_separation': min_separation(points),
            'regime': regime,
            'enclosing_lines': enclosing_lines(slanted).describe(),
        })
        return '%d points, %s' % (len(points), regime)
