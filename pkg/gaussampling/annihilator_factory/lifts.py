'''
Lifting one-variable profiles to the plane.

For coprime ``(p, q)``, ``sigma = sqrt(p^2 + q^2)`` and a profile
``g(t) = sum_n c_n exp(-a sigma^2 (t - n)^2)``

    f(z, w) = sum_n c_n exp(-a (z - p n)^2 - a (w - q n)^2)
            = exp(a u^2 - a z^2 - a w^2) g(u / sigma),   u = (p z + q w) / sigma,

so ``f`` vanishes on every line ``u = sigma t`` with ``g(t) = 0``. Since
``u^2 <= z^2 + w^2`` the lift is bounded by ``sup |g|``.
'''
import math
from dataclasses import dataclass

import numpy as np

from gaussampling.annihilator_factory.theta import alternating_theta
from gaussampling.core_series.grids import CoeffGrid
from gaussampling.core_series.series import GaussSeriesFunction
from gaussampling.point_sets.descriptors import Progression
from gaussampling.point_sets.slanted import SlantedConfig, check_coprime
from gaussampling.utils.decorators import logged_operation
from gaussampling.utils.exceptions import InvalidParameterError

_SCALE_RTOL = 1e-12


@dataclass(frozen=True, eq=False)
class Lift:
    '''A lifted profile in its two representations.'''
    profile: GaussSeriesFunction
    p: int
    q: int
    series: GaussSeriesFunction

    @property
    def sigma(self):
        return math.hypot(self.p, self.q)

    def line_coordinate(self, points):
        points = np.asarray(points, dtype=float).reshape(-1, 2)
        return (self.p * points[:, 0] + self.q * points[:, 1]) / self.sigma

    def closed_form(self, points):
        '''``exp(a u^2 - a |x|^2) g(u / sigma)`` at real points ``(P, 2)``.'''
        points = np.asarray(points, dtype=float).reshape(-1, 2)
        u = self.line_coordinate(points)
        a = self.profile.a
        damping = np.exp(a * u * u - a * np.sum(points * points, axis=1))
        return damping * self.profile.eval(u / self.sigma)

    def eval(self, points):
        return self.series.eval(points)

    def describe(self):
        return 'lift (p=%d, q=%d) of a profile on %s' % (self.p, self.q, self.profile.coeffs.support)


@logged_operation
def lift_to_2d(profile, p, q, a=None):
    '''Places ``c_n`` of `profile` at ``(p n, q n)``.

    :param profile: A 1D :class:`GaussSeriesFunction` with scale ``sigma``.
    :param a: Optional shape; must agree with the profile's.
    :returns: :class:`Lift`
    :raises: :class:`InvalidParameterError` on a scale or shape mismatch.
    '''
    p, q = check_coprime(p, q)
    if profile.dim != 1:
        raise InvalidParameterError("only 1D profiles can be lifted")
    sigma = math.hypot(p, q)
    if abs(profile.scale - sigma) > _SCALE_RTOL * sigma:
        raise InvalidParameterError("profile scale %r does not match (p, q) = (%d, %d); "
                                    "expected sigma = %r" % (profile.scale, p, q, sigma))
    if a is not None and abs(a - profile.a) > _SCALE_RTOL * profile.a:
        raise InvalidParameterError("profile has a = %r, not %r" % (profile.a, a))
    (lo, hi), = profile.coeffs.support
    n = np.arange(lo, hi + 1)
    rows, columns = p * n, q * n
    origin = (int(rows.min()), int(columns.min()))
    values = np.zeros((int(rows.max()) - origin[0] + 1, int(columns.max()) - origin[1] + 1),
                      dtype=profile.coeffs.values.dtype)
    values[rows - origin[0], columns - origin[1]] = profile.coeffs.values
    grid = CoeffGrid(origin, values, profile.coeffs.declared_p)
    return Lift(profile, p, q, GaussSeriesFunction(profile.a, grid, 1.0, profile.trunc_tol))


@logged_operation
def critical_counterexamples(p, q, a, radius=40):
    '''Lifted alternating combs for the critical slanted configurations.

    The first vanishes wherever ``p x + q y`` lies in ``sigma^2 (Z + 1/2)``,
    the second wherever ``(p y - q x) / sigma^2`` lies in ``Z + 1/2``.
    '''
    p, q = check_coprime(p, q)
    comb = alternating_theta(a, math.hypot(p, q), radius)
    return lift_to_2d(comb, p, q), lift_to_2d(comb, -q, p)


def critical_configs(p, q, gamma1_prime, gamma2_prime):
    '''The configurations ``(sigma^2 (Z + 1/2), Gamma2')`` and
    ``(Gamma1', Z + 1/2)`` annihilated by :func:`critical_counterexamples`.'''
    p, q = check_coprime(p, q)
    sigma_squared = p * p + q * q
    first = SlantedConfig(p, q, Progression(sigma_squared, sigma_squared / 2.0), gamma2_prime)
    second = SlantedConfig(p, q, gamma1_prime, Progression(1.0, 0.5))
    return first, second
