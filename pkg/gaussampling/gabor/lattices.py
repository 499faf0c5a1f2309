'''
Time-frequency lattices ``Delta_{a,b,c,d}`` and Gabor products ``Lambda x Z^2``.

For coprime ``(p, q)`` and ``sigma = sqrt(p^2 + q^2)`` the time plane of
``Delta_{a,b,c,d}`` is

    diag(1/a, 1/b) R ((c / sigma) Z  x  d sigma Z),   R = [[p, -q], [q, p]] / sigma,

the slanted configuration over ``c Z`` and ``d Z`` squeezed by
``diag(1/a, 1/b)``, and its modulations are ``a Z x b Z``. The window is
``exp(-(alpha x^2 + beta y^2))`` with ``beta = alpha b^2 / a^2``.
'''
import itertools
import math
from dataclasses import dataclass

import numpy as np

from gaussampling.loggers import debug_log
from gaussampling.point_sets.density import beurling_density
from gaussampling.point_sets.descriptors import Progression
from gaussampling.point_sets.slanted import SlantedConfig, build_slanted, check_coprime
from gaussampling.utils.decorators import logged_operation
from gaussampling.utils.exceptions import AccuracyError, InvalidParameterError

DELTA_ABCD = 'delta_abcd'
PRODUCT = 'product'
VOLUME_TOL = 1e-12


def _positive(name, value):
    value = float(value)
    if not math.isfinite(value) or value <= 0:
        raise InvalidParameterError("%s must be positive and finite, got %r" % (name, value))
    return value


@dataclass(frozen=True)
class GaborLatticeSpec:
    '''Either ``Delta_{a,b,c,d}`` with shape `alpha`, or the product of a
    slanted `config` with ``Z^2`` and the isotropic shape `alpha`.

    Build instances through :meth:`delta` and :meth:`product`.
    '''
    mode: str
    alpha: float
    p: int = None
    q: int = None
    a: float = 1.0
    b: float = 1.0
    c: float = None
    d: float = None
    config: SlantedConfig = None

    def __post_init__(self):
        object.__setattr__(self, 'alpha', _positive('alpha', self.alpha))
        if self.mode == DELTA_ABCD:
            p, q = check_coprime(self.p, self.q)
            object.__setattr__(self, 'p', p)
            object.__setattr__(self, 'q', q)
            for name in 'abcd':
                object.__setattr__(self, name, _positive(name, getattr(self, name)))
            self.check_volume()
        elif self.mode == PRODUCT:
            if not isinstance(self.config, SlantedConfig):
                raise InvalidParameterError("product lattices need a slanted configuration")
            object.__setattr__(self, 'p', self.config.p)
            object.__setattr__(self, 'q', self.config.q)
        else:
            raise InvalidParameterError("unknown lattice mode %r" % (self.mode,))

    @classmethod
    def delta(cls, p, q, a, b, c, d, alpha=np.pi):
        return cls(DELTA_ABCD, alpha, p, q, a, b, c, d)

    @classmethod
    def product(cls, config, shape=np.pi):
        return cls(PRODUCT, shape, config=config)

    @property
    def sigma(self):
        return math.sqrt(self.p * self.p + self.q * self.q)

    @property
    def beta(self):
        return self.alpha * self.b * self.b / (self.a * self.a)

    def time_generators(self):
        '''Columns generating the time plane.

        :raises: :class:`InvalidParameterError` for a product whose
                 configuration is not a lattice through the origin.
        '''
        p, q, s2 = self.p, self.q, self.p * self.p + self.q * self.q
        if self.mode == DELTA_ABCD:
            a, b, c, d = self.a, self.b, self.c, self.d
            return np.array([[p * c / (a * s2), -q * d / a],
                             [q * c / (b * s2), p * d / b]])
        gamma1, gamma2 = self.config.gamma1, self.config.gamma2
        if not (isinstance(gamma1, Progression) and isinstance(gamma2, Progression)
                and gamma1.beta == 0 and gamma2.beta == 0):
            raise InvalidParameterError("only progressions through zero generate a lattice")
        return np.array([[p * gamma1.alpha / s2, -q * gamma2.alpha],
                         [q * gamma1.alpha / s2, p * gamma2.alpha]])

    def modulation_generators(self):
        if self.mode == DELTA_ABCD:
            return np.diag([self.a, self.b])
        return np.eye(2)

    def generator_matrix(self):
        '''The block diagonal ``4 x 4`` generator matrix.'''
        generators = np.zeros((4, 4))
        generators[:2, :2] = self.time_generators()
        generators[2:, 2:] = self.modulation_generators()
        return generators

    def volume(self):
        return float(abs(np.linalg.det(self.generator_matrix())))

    def check_volume(self):
        '''Recomputes the volume from the generators; it must equal ``c d``.'''
        volume, expected = self.volume(), self.c * self.d
        if abs(volume - expected) > VOLUME_TOL * max(1.0, expected):
            raise AccuracyError("lattice volume %.17g differs from c d = %.17g"
                                % (volume, expected), volume=volume, expected=expected)
        return volume

    def format_generators(self):
        '''The generator matrix as a text block, one row per line.'''
        return '\n'.join(' '.join(repr(float(x)) for x in row)
                         for row in self.generator_matrix())

    def describe(self):
        if self.mode == DELTA_ABCD:
            return 'delta p=%d q=%d a=%r b=%r c=%r d=%r alpha=%r' % (
                self.p, self.q, self.a, self.b, self.c, self.d, self.alpha)
        return 'product %s x Z^2 shape=%r' % (self.config.describe(), self.alpha)


def _normalise_window4d(window):
    window = np.asarray(window, dtype=float)
    if window.shape != (4, 2) or np.any(window[:, 1] < window[:, 0]):
        raise InvalidParameterError("window must hold four (lo, hi) pairs with lo <= hi")
    if not np.all(np.isfinite(window)):
        raise InvalidParameterError("window must be finite")
    return window


def _cartesian(time_points, modulations):
    if len(time_points) == 0 or len(modulations) == 0:
        return np.zeros((0, 4))
    left = np.repeat(time_points, len(modulations), axis=0)
    right = np.tile(modulations, (len(time_points), 1))
    return np.hstack((left, right))


@logged_operation
def build_delta_lattice(spec, window4d):
    '''All points of the time-frequency set of `spec` inside `window4d`.

    :param window4d: ``((x0, x1), (y0, y1), (xi0, xi1), (eta0, eta1))``.
    :returns: ``(P, 4)`` array of ``(x, y, xi, eta)``; time points in the
              order of :func:`build_slanted`, modulations innermost.
    '''
    window = _normalise_window4d(window4d)
    if spec.mode == DELTA_ABCD:
        config = SlantedConfig(spec.p, spec.q, Progression(spec.c), Progression(spec.d))
        squeeze = np.array([spec.a, spec.b])
        stretched = build_slanted(config, window[:2] * squeeze[:, None]) / squeeze
        inside = np.all((stretched >= window[:2, 0]) & (stretched <= window[:2, 1]), axis=1)
        time_points = stretched[inside]
        steps = (spec.a, spec.b)
    else:
        time_points = build_slanted(spec.config, window[:2])
        steps = (1.0, 1.0)
    xi = Progression(steps[0]).points(window[2])
    eta = Progression(steps[1]).points(window[3])
    modulations = np.array(list(itertools.product(xi, eta))).reshape(-1, 2)
    points = _cartesian(time_points, modulations)
    debug_log.debug("%s: %d time points, %d modulations", spec.describe(),
                    len(time_points), len(modulations))
    return points


def lattice_points(generators, window):
    '''Points ``G k`` with integer ``k`` inside the box `window`, sorted
    lexicographically.

    The integer ranges come from the preimages of the box corners, so any
    ordering of the generator columns yields the same points.
    '''
    generators = np.asarray(generators, dtype=float)
    window = np.asarray(window, dtype=float)
    dim = generators.shape[0]
    if generators.shape != (dim, dim) or window.shape != (dim, 2):
        raise InvalidParameterError("generators and window dimensions disagree")
    if abs(np.linalg.det(generators)) == 0:
        raise InvalidParameterError("generators are linearly dependent")
    corners = np.array(list(itertools.product(*window)))
    preimages = np.linalg.solve(generators, corners.T)
    lows = np.floor(preimages.min(axis=1)).astype(int)
    highs = np.ceil(preimages.max(axis=1)).astype(int)
    axes = [np.arange(lo, hi + 1) for lo, hi in zip(lows, highs)]
    ks = np.stack(np.meshgrid(*axes, indexing='ij'), axis=-1).reshape(-1, dim)
    points = ks @ generators.T
    tol = 1e-12 * max(1.0, float(np.abs(window).max()))
    inside = np.all((points >= window[:, 0] - tol) & (points <= window[:, 1] + tol), axis=1)
    points = points[inside]
    return points[np.lexsort(points.T[::-1])]


def isotropic_reduction(spec):
    '''The isotropic shape and slanted configuration for ``Delta_{1,1,c,d}``.

    ``f(x, y) -> f(a x, b y)`` maps the system of shape ``alpha / a^2`` over
    ``Delta_{1,1,c,d}`` onto the system of `spec`, so both are frames
    together. Products are returned unchanged.

    :returns: ``(shape, SlantedConfig)``
    '''
    if spec.mode == PRODUCT:
        return spec.alpha, spec.config
    config = SlantedConfig(spec.p, spec.q, Progression(spec.c), Progression(spec.d))
    return spec.alpha / (spec.a * spec.a), config


def density_conditions(spec, radii=None):
    '''Which of the density conditions on ``Gamma_1`` and ``Gamma_2`` hold.

    ``(i)`` and ``(ii)`` are the sufficient conditions; ``necessary`` is
    the strict necessary triple ``D1 > sigma^-2``, ``D2 > 1``, ``D1 D2 > 1``.
    For ``Delta_{a,b,c,d}`` they read ``c < 1, d < 1`` and
    ``c < sigma^2, d < sigma^-2``.
    '''
    _, config = isotropic_reduction(spec)
    s2 = config.sigma_squared
    d1 = beurling_density(config.gamma1, radii).lower
    d2 = beurling_density(config.gamma2, radii).lower
    condition_i = d1 > 1 and d2 > 1
    condition_ii = d1 > 1.0 / s2 and d2 > s2
    necessary = d1 > 1.0 / s2 and d2 > 1 and d1 * d2 > 1
    return {
        'lattice': spec.describe(),
        'sigma_squared': s2,
        'D1': d1,
        'D2': d2,
        'condition_i': bool(condition_i),
        'condition_ii': bool(condition_ii),
        'sufficient': bool(condition_i or condition_ii),
        'necessary': bool(necessary),
    }
