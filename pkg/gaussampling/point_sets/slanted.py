'''
Slanted configurations: the rotated products

    Lambda = R (Gamma1 / sigma  x  sigma Gamma2),
    R = [[p, -q], [q, p]] / sigma,   sigma = sqrt(p^2 + q^2),

for coprime integers ``(p, q)``, and families of parallel lines.

A point ``(x, y)`` belongs to the configuration exactly when
``p x + q y`` lies in ``Gamma1`` and ``(p y - q x) / sigma^2`` lies in
``Gamma2``; translates and the reflected translates are therefore again
slanted configurations with shifted ``Gamma1`` and ``Gamma2``.
'''
import math
from dataclasses import dataclass

import numpy as np

from gaussampling.point_sets.density import beurling_density
from gaussampling.point_sets.descriptors import PointSet1D, affine, scaled, shifted
from gaussampling.utils.decorators import logged_operation
from gaussampling.utils.exceptions import AccuracyError, InvalidParameterError


def check_coprime(p, q):
    if int(p) != p or int(q) != q:
        raise InvalidParameterError("p and q must be integers, got (%r, %r)" % (p, q))
    p, q = int(p), int(q)
    if p == 0 and q == 0:
        raise InvalidParameterError("p and q must not both be zero")
    if math.gcd(p, q) != 1:
        raise InvalidParameterError("p=%d and q=%d are not coprime" % (p, q))
    return p, q


@dataclass(frozen=True)
class SlantedConfig:
    '''The configuration of coprime `p`, `q` over `gamma1` and `gamma2`.'''
    p: int
    q: int
    gamma1: PointSet1D
    gamma2: PointSet1D

    def __post_init__(self):
        p, q = check_coprime(self.p, self.q)
        object.__setattr__(self, 'p', p)
        object.__setattr__(self, 'q', q)

    @property
    def sigma_squared(self):
        return self.p * self.p + self.q * self.q

    @property
    def sigma(self):
        return math.sqrt(self.sigma_squared)

    def rotation(self):
        '''The rotation matrix, checked for orthogonality.'''
        sigma = self.sigma
        rotation = np.array([[self.p / sigma, -self.q / sigma],
                             [self.q / sigma, self.p / sigma]])
        residual = np.max(np.abs(rotation.T @ rotation - np.eye(2)))
        if residual > 1e-15:
            raise AccuracyError("rotation is not orthogonal, residual %.3e" % residual,
                                residual=residual)
        return rotation

    def coordinates(self, points):
        '''The ``(gamma1, gamma2)`` pair each point is generated from.'''
        points = np.asarray(points, dtype=float).reshape(-1, 2)
        x, y = points[:, 0], points[:, 1]
        return np.column_stack((self.p * x + self.q * y,
                                (self.p * y - self.q * x) / self.sigma_squared))

    def describe(self):
        return 'slanted p=%d q=%d gamma1={%s} gamma2={%s}' % (
            self.p, self.q, self.gamma1.describe(), self.gamma2.describe())


def normalise_box(window):
    window = np.asarray(window, dtype=float)
    if window.shape != (2, 2) or np.any(window[:, 1] < window[:, 0]):
        raise InvalidParameterError("window must be ((x0, x1), (y0, y1)) with x0 <= x1, y0 <= y1")
    return window


@logged_operation
def build_slanted(config, window):
    '''All points of `config` inside the closed box `window`.

    :param window: ``((x0, x1), (y0, y1))``.
    :returns: ``(P, 2)`` array sorted lexicographically.
    '''
    window = normalise_box(window)
    rotation = config.rotation()
    p, q, s2 = config.p, config.q, config.sigma_squared
    corners = np.array([(x, y) for x in window[0] for y in window[1]])
    first = p * corners[:, 0] + q * corners[:, 1]
    second = (p * corners[:, 1] - q * corners[:, 0]) / s2
    g1 = config.gamma1.points((first.min(), first.max()))
    g2 = config.gamma2.points((second.min(), second.max()))
    if g1.size == 0 or g2.size == 0:
        return np.zeros((0, 2))
    u, v = np.meshgrid(g1 / config.sigma, config.sigma * g2, indexing='ij')
    points = np.column_stack((u.ravel(), v.ravel())) @ rotation.T
    x, y = points[:, 0], points[:, 1]
    inside = (x >= window[0, 0]) & (x <= window[0, 1]) & (y >= window[1, 0]) & (y <= window[1, 1])
    points = points[inside]
    return points[np.lexsort((points[:, 1], points[:, 0]))]


def alternative_representation(config):
    '''The same point set written as ``(q, -p, -sigma^2 Gamma2, Gamma1 / sigma^2)``.'''
    s2 = config.sigma_squared
    return SlantedConfig(config.q, -config.p,
                         scaled(config.gamma2, -s2), scaled(config.gamma1, 1.0 / s2))


def translate(item, shift):
    '''Translates a 1D set by a real `shift` or a slanted configuration
    by a vector; both stay within their descriptor family.'''
    if isinstance(item, SlantedConfig):
        u, v = (float(s) for s in shift)
        p, q, s2 = item.p, item.q, item.sigma_squared
        return SlantedConfig(p, q, shifted(item.gamma1, p * u + q * v),
                             shifted(item.gamma2, (p * v - q * u) / s2))
    return shifted(item, float(shift))


def reflect_translate(config, shift):
    '''The configuration generating ``-Lambda + (u, v)``.'''
    u, v = (float(s) for s in shift)
    p, q, s2 = config.p, config.q, config.sigma_squared
    return SlantedConfig(p, q, affine(config.gamma1, -1.0, p * u + q * v),
                         affine(config.gamma2, -1.0, (p * v - q * u) / s2))


SUFFICIENT = 'sufficient'
NECESSARY_VIOLATED = 'necessary-violated'
UNDETERMINED = 'undetermined'


def density_regime(config, radii=None):
    '''Labels `config` by its lower densities.

    ``sufficient`` when both exceed one, or the first exceeds ``sigma^-2``
    and the second ``sigma^2``; ``necessary-violated`` when the first is
    below ``sigma^-2``, the second below one, or their product below one.
    '''
    s2 = config.sigma_squared
    d1 = beurling_density(config.gamma1, radii).lower
    d2 = beurling_density(config.gamma2, radii).lower
    if (d1 > 1 and d2 > 1) or (d1 > 1.0 / s2 and d2 > s2):
        return SUFFICIENT
    if d1 < 1.0 / s2 or d2 < 1 or d1 * d2 < 1:
        return NECESSARY_VIOLATED
    return UNDETERMINED


@dataclass(frozen=True)
class LineFamily:
    '''Parallel lines ``{(x, y) : (x, y) . v in offsets}`` for a unit normal ``v``.

    Rational families carry coprime ``(p, q)`` with ``v = (p, q) / sigma``;
    irrational ones carry a caller-declared ``slope`` with
    ``v = (1, slope) / sqrt(1 + slope^2)`` and ``sigma = inf``.
    '''
    offsets: PointSet1D
    p: int = None
    q: int = None
    slope: float = None

    def __post_init__(self):
        if self.slope is None:
            p, q = check_coprime(self.p, self.q)
            object.__setattr__(self, 'p', p)
            object.__setattr__(self, 'q', q)
        elif self.p is not None or self.q is not None:
            raise InvalidParameterError("a line family is either rational or irrational")
        elif not math.isfinite(self.slope):
            raise InvalidParameterError("irrational slope must be finite")

    @classmethod
    def rational(cls, p, q, offsets):
        return cls(offsets, p=p, q=q)

    @classmethod
    def irrational(cls, slope, offsets):
        '''A family the caller declares irrational; floats are never tested
        for rationality.'''
        return cls(offsets, slope=float(slope))

    @property
    def is_rational(self):
        return self.slope is None

    @property
    def sigma(self):
        if self.is_rational:
            return math.sqrt(self.p * self.p + self.q * self.q)
        return math.inf

    @property
    def normal(self):
        if self.is_rational:
            return np.array([self.p, self.q], dtype=float) / self.sigma
        return np.array([1.0, self.slope]) / math.hypot(1.0, self.slope)

    @property
    def tangent(self):
        nx, ny = self.normal
        return np.array([-ny, nx])

    def offset_range(self, window):
        '''Smallest and largest ``(x, y) . v`` over the box `window`.'''
        window = normalise_box(window)
        corners = np.array([(x, y) for x in window[0] for y in window[1]])
        values = corners @ self.normal
        return float(values.min()), float(values.max())

    def lines(self, window):
        '''Offsets of the lines meeting `window`.'''
        return self.offsets.points(self.offset_range(window))

    def line_points(self, gamma, ts):
        '''Points ``gamma v + t v_perp`` on the line with offset `gamma`.'''
        ts = np.asarray(ts, dtype=float)
        return gamma * self.normal[None, :] + ts[:, None] * self.tangent[None, :]

    def residuals(self, points, gamma):
        return np.abs(np.asarray(points, dtype=float) @ self.normal - gamma)

    def describe(self):
        if self.is_rational:
            return 'lines rational %d %d offsets={%s}' % (self.p, self.q, self.offsets.describe())
        return 'lines irrational %r offsets={%s}' % (self.slope, self.offsets.describe())


def enclosing_lines(config):
    '''The lines ``{(x, y) . (-q, p) / sigma in sigma Gamma2}`` holding every
    point of `config`.'''
    return LineFamily.rational(-config.q, config.p, scaled(config.gamma2, config.sigma))
