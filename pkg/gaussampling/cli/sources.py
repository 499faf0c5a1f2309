'''
Builds the objects the commands operate on from their parameter sections.

A 1D point set is given by ``set``; a slanted configuration by ``p``,
``q``, ``gamma1`` and ``gamma2``; a line family by ``p`` and ``q`` or by
an irrational ``slope``, with ``offsets``.
'''
import math

from gaussampling.gabor.lattices import GaborLatticeSpec
from gaussampling.point_sets.slanted import LineFamily, SlantedConfig

DEFAULT_WINDOW = (-5.0, 5.0)


def slanted_from(params, gamma1_key='gamma1', gamma2_key='gamma2'):
    return SlantedConfig(params.integer('p'), params.integer('q'),
                         params.descriptor(gamma1_key), params.descriptor(gamma2_key))


def source_from(params):
    '''A 1D set when ``set`` is present, a slanted configuration otherwise.'''
    if 'set' in params:
        return params.descriptor('set')
    return slanted_from(params)


def family_from(params):
    offsets = params.descriptor('offsets')
    if 'slope' in params:
        return LineFamily.irrational(params.number('slope'), offsets)
    return LineFamily.rational(params.integer('p'), params.integer('q'), offsets)


def gabor_spec_from(params):
    '''``Delta_{a,b,c,d}`` from ``p q a b c d alpha``, or the product of a
    slanted configuration with ``Z^2`` when ``gamma1`` is given.'''
    if 'gamma1' in params:
        return GaborLatticeSpec.product(slanted_from(params), params.number('shape', math.pi))
    return GaborLatticeSpec.delta(params.integer('p'), params.integer('q'),
                                  params.number('a', 1.0), params.number('b', 1.0),
                                  params.number('c'), params.number('d'),
                                  params.number('alpha', math.pi))


def box_from(params, key='window', default=DEFAULT_WINDOW):
    '''``lo hi`` for a square box or ``x0 x1 y0 y1``.'''
    values = params.numbers(key, list(default))
    if len(values) == 2:
        return (tuple(values), tuple(values))
    if len(values) == 4:
        return ((values[0], values[1]), (values[2], values[3]))
    raise params.error(key, 'expected 2 or 4 numbers, got %d' % len(values))


def interval_from(params, key='window', default=DEFAULT_WINDOW):
    return tuple(params.numbers(key, list(default), count=2))
