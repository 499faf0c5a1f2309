'''
Lifted annihilators vanishing on a rational line family.
'''
from gaussampling.cli.base import ExperimentCommand
from gaussampling.cli.management.commands.lift import check_points, lift_gap
from gaussampling.cli.sources import box_from, family_from
from gaussampling.core_series.serializers import dumps
from gaussampling.trajectory.annihilation import annihilator_on_trajectory


def lift_error(lift, box):
    '''Largest gap between the closed form and the coefficient series of
    `lift` on a grid over `box`, relative to the largest closed form value.'''
    gap, peak = lift_gap(lift, check_points(box))
    return float(gap.max()) / peak if peak else 0.0


class Command(ExperimentCommand):
    help = 'Builds a function of V^2_a vanishing on every line of a sparse rational family.'
    explanation = ('A profile g vanishing on Gamma / sigma lifts to '
                   'exp(a u^2 - a |x|^2) g(u / sigma), u = (p x + q y) / sigma, which lies '
                   'in V^2_a and vanishes on the lines (p x + q y) / sigma in Gamma. The '
                   'profile exists when D+(Gamma) sigma < 1.')

    reference = ('Functions of V^2_a vanishing on sparse rational line families, '
                 'lifted from one variable.')

    def run(self, config, artifacts):
        params = config.params
        family = family_from(params)
        window = box_from(params, default=(-4.0, 4.0))
        result = annihilator_on_trajectory(family, params.number('a'), window,
                                           params.number('epsilon', None),
                                           params.integers('k_range', [-12, 12], count=2))
        report = result.report()
        report['lift_error'] = lift_error(result.lift, window)
        artifacts.text('trajectory_annihilate.txt', dumps(result.lift.series))
        artifacts.report('trajectory_annihilate.json', report)
        return 'residual %r on the lines, lift error %r' % (result.residual, report['lift_error'])
