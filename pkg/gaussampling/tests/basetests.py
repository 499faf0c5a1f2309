'''Shared fixtures for the numerical test suites.

Every suite seeds its own generator through :func:`make_rng` so that test
order never changes the drawn coefficients.
'''
import numpy as np

from gaussampling.core_series.grids import CoeffGrid
from gaussampling.core_series.series import GaussSeriesFunction

SEED = 20130501


def make_rng(offset=0):
    '''A numpy generator seeded from the suite seed.'''
    return np.random.default_rng(SEED + offset)


def random_grid(rng, support, complex_values=False):
    '''Coefficients drawn uniformly from [-1, 1] (real and imaginary parts)
    over `support`.'''
    empty = CoeffGrid.zeros(support)
    shape = empty.values.shape
    values = rng.uniform(-1.0, 1.0, shape)
    if complex_values:
        values = values + 1j * rng.uniform(-1.0, 1.0, shape)
    return CoeffGrid(empty.origin, values)


def random_function(rng, support, a=1.0, scale=1.0, complex_values=False):
    return GaussSeriesFunction(a, random_grid(rng, support, complex_values), scale)


def unit_grid(rng, support):
    '''A random grid normalised to unit l^2 norm.'''
    grid = random_grid(rng, support)
    return grid.scaled(1.0 / grid.norm(2))


def create_point_sets(cls):
    '''Attaches the point sets most suites share to `cls`.'''
    from gaussampling.point_sets.descriptors import Progression, Puncture

    cls.integers = Progression(1.0)
    cls.even = Progression(2.0)
    cls.punctured = Puncture(Progression(1.0), (0.0,))
    cls.dense = Progression(0.9)


def assert_close(testcase, actual, expected, rtol=1e-12, atol=0.0):
    '''Elementwise closeness with a readable failure message.'''
    actual = np.asarray(actual)
    expected = np.asarray(expected)
    testcase.assertEqual(actual.shape, expected.shape)
    worst = np.max(np.abs(actual - expected) - (atol + rtol * np.abs(expected)), initial=-1.0)
    testcase.assertTrue(np.allclose(actual, expected, rtol=rtol, atol=atol),
                        "arrays differ beyond tolerance by %.3e" % worst)
