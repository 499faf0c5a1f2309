'''
The acceptance runs, each with the commands and parameters that reproduce
it and the qualitative outcome to expect.
'''
from collections import namedtuple

Run = namedtuple('Run', 'command params')
Experiment = namedtuple('Experiment', 'number name runs expected claim')

EXPERIMENTS = (
    Experiment(
        1, 'theta-zeros',
        (Run('theta', {'a': 'pi', 'scale': '1', 'window': '-3 3'}),),
        'max |g(k + 1/2)| over |k| <= 5 is at most 1e-10 of the sup-norm',
        'the alternating Gaussian comb vanishes on Z + 1/2'),
    Experiment(
        2, 'lifting-identity',
        (Run('lift', {'p': '1', 'q': '2', 'a': '1', 'draws': '20', 'support': '-10 10',
                      'window': '-3 3', 'tolerance': '1e-8'}),),
        'closed form and coefficient series agree to 1e-8 absolute on a 41 x 41 grid '
        'over [-3, 3]^2 for 20 seeded draws on [-10, 10]',
        'a profile of scale sigma lifts to a planar Gaussian series with a closed form'),
    Experiment(
        3, 'product-annihilator',
        (Run('annihilator', {'target': 'prog 2 0.3', 'a': '1', 'epsilon': '0.25',
                             'k_range': '-12 12'}),),
        'residual <= 1e-8 sup on the target in [-8, 8]; decay slope near -a/(1-eps)',
        'a set of counting density below one carries a nonzero annihilator'),
    Experiment(
        4, 'integers-vs-punctured',
        (Run('frame-trend', {'set': 'prog 1 0', 'a': 'pi', 'sizes': '10 20 40'}),
         Run('frame-trend', {'set': 'puncture { prog 1 0 } 0', 'a': 'pi',
                             'sizes': '10 20 40'})),
        'A_est(Z) within 2x across N; A_est(Z minus 0) strictly decreasing, halved by N = 40',
        'the integers sample V_a for a = pi while the integers without zero do not'),
    Experiment(
        5, 'slanted-lattices',
        (Run('frame-trend', {'p': '1', 'q': '1', 'gamma1': 'prog 0.9 0',
                             'gamma2': 'prog 0.9 0', 'a': 'pi', 'sizes': '10 20 40'}),
         Run('frame-trend', {'p': '1', 'q': '1', 'gamma1': 'prog 1.2 0',
                             'gamma2': 'prog 1.2 0', 'a': 'pi', 'sizes': '10 20 40'})),
        'densities 1/0.9 stable within 2x; densities 1/1.2 decay at least 10x',
        'slanted configurations over dense enough progressions are sampling sets'),
    Experiment(
        6, 'critical-counterexample',
        (Run('theta', {'a': 'pi', 'p': '1', 'q': '1', 'gamma1': 'prog 0.7 0',
                       'window': '-7 7'}),),
        'the second lifted comb vanishes to 1e-8 sup on the critical configuration',
        'critical slanted configurations are not uniqueness sets'),
    Experiment(
        7, 'trajectory-dichotomy',
        (Run('trajectory-trend', {'slope': '1.618033988749895', 'offsets': 'prog 4 0',
                                  'a': 'pi', 'sizes': '10 20 40', 'delta': '0.1',
                                  'stable_within': '2'}),
         Run('trajectory-trend', {'p': '1', 'q': '1', 'offsets': 'prog 4 0', 'a': 'pi',
                                  'sizes': '10 20 40', 'delta': '0.1', 'decay_by': '10'}),
         Run('trajectory-trend', {'p': '1', 'q': '1', 'offsets': 'prog 0.6 0', 'a': 'pi',
                                  'sizes': '10 20 40', 'delta': '0.1', 'stable_within': '2'})),
        ('irrational slope over 4Z stable within 2x; (1, 1) over 4Z decays at least 10x; '
         '(1, 1) over 0.6Z stable within 2x. Each run reports its measured factor against '
         'the target; N = 10 keeps one interior column, and the 0.6Z spread measured '
         'about 3x from N = 10 and about 1.04x from N = 20'),
        'lines of irrational slope sample iff their offsets have positive density'),
    Experiment(
        8, 'trajectory-annihilator',
        (Run('trajectory-annihilate', {'p': '1', 'q': '1', 'offsets': 'prog 2 0', 'a': '1'}),),
        'the lifted annihilator vanishes on the lines to 1e-6 sup',
        'sparse rational line families carry a nonzero function vanishing on them'),
    Experiment(
        9, 'gabor-trends',
        (Run('gabor-trend', {'p': '1', 'q': '1', 'c': '0.9', 'd': '0.9', 'sizes': '10 20'}),
         Run('gabor-trend', {'p': '1', 'q': '2', 'c': '4', 'd': '0.19', 'sizes': '10 20'}),
         Run('gabor-trend', {'p': '1', 'q': '1', 'c': '1.2', 'd': '1.2',
                             'sizes': '10 20 40'})),
        'min-translate A_est stable for both frame conditions; c = d = 1.2 decays 10x',
        'rational lattices meeting the density conditions give Gaussian Gabor frames'),
    Experiment(
        10, 'quadrature-and-norms',
        (Run('norms', {'a': '1', 'draws': '50'}),),
        'single-atom line integrals to 1e-6; norm ratio spread below 10',
        'function norms and coefficient norms are equivalent on V_a'),
)


def list_experiments():
    '''The manifest, one entry per acceptance run.'''
    return EXPERIMENTS
