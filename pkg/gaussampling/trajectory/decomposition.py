'''
Restriction of a planar Gaussian series to the lines of a rational family.

For coprime ``(p, q)`` with ``v = (p, q) / sigma`` the index ``(n, m)`` lies
at distance ``k / sigma`` from the line through the origin, where
``k = p m - q n``. Grouping the coefficients by ``k`` gives

    f(u v + t v_perp) = sum_k exp(-kappa (t - k / sigma)^2) g_k(u / sigma - s_k),
    g_k(z) = sum_l c_{n0 + p l, m0 + q l} exp(-kappa sigma^2 (z - l)^2),

with ``s_k = (p n0 + q m0) / sigma^2`` for the first index ``(n0, m0)`` of
the class. ``f`` vanishes on the line ``u = gamma`` exactly when every
``g_k`` vanishes at ``gamma / sigma - s_k``.
'''
from dataclasses import dataclass

import numpy as np

from gaussampling.core_series.grids import CoeffGrid
from gaussampling.core_series.series import GaussSeriesFunction
from gaussampling.point_sets.slanted import check_coprime
from gaussampling.utils.decorators import logged_operation
from gaussampling.utils.exceptions import InvalidParameterError


@dataclass(frozen=True)
class LineClass:
    k: int
    anchor: tuple
    shift: float
    profile: GaussSeriesFunction


@dataclass(frozen=True, eq=False)
class LineDecomposition:
    p: int
    q: int
    kappa: float
    classes: tuple

    @property
    def sigma(self):
        return float(np.hypot(self.p, self.q))

    def coordinates(self, points):
        '''``(u, t)`` of planar points along ``v`` and ``v_perp``.'''
        points = np.asarray(points, dtype=float).reshape(-1, 2)
        sigma = self.sigma
        u = (self.p * points[:, 0] + self.q * points[:, 1]) / sigma
        t = (self.p * points[:, 1] - self.q * points[:, 0]) / sigma
        return u, t

    def line_residual(self, gamma):
        '''``max_k |g_k(gamma / sigma - s_k)|``.'''
        if not self.classes:
            return 0.0
        position = gamma / self.sigma
        return float(max(abs(c.profile.eval([position - c.shift])[0]) for c in self.classes))


@logged_operation
def line_decomposition(f, p, q):
    '''Splits a 2D series into its line classes; all-zero classes are skipped.

    :returns: :class:`LineDecomposition`
    '''
    p, q = check_coprime(p, q)
    if f.dim != 2:
        raise InvalidParameterError("line decompositions need a 2D function")
    sigma_squared = p * p + q * q
    nn, mm = f.coeffs.indices()
    values = f.coeffs.values
    ks = p * mm - q * nn
    along = p * nn + q * mm
    classes = []
    for k in np.unique(ks):
        member = ks == k
        if not np.any(values[member]):
            continue
        order = np.argsort(along[member])
        n0 = int(nn[member][order[0]])
        m0 = int(mm[member][order[0]])
        steps = (along[member][order] - along[member][order[0]]) // sigma_squared
        coeffs = np.zeros(int(steps.max()) + 1, dtype=values.dtype)
        coeffs[steps] = values[member][order]
        profile = GaussSeriesFunction(f.a, CoeffGrid((0,), coeffs), f.scale * np.sqrt(sigma_squared),
                                      f.trunc_tol)
        classes.append(LineClass(int(k), (n0, m0), (p * n0 + q * m0) / sigma_squared, profile))
    return LineDecomposition(p, q, f.kappa, tuple(classes))


def evaluate_decomposition(decomposition, points):
    '''Evaluates the function behind `decomposition` at planar `points`.'''
    u, t = decomposition.coordinates(points)
    sigma = decomposition.sigma
    total = np.zeros(u.shape, dtype=complex)
    for line in decomposition.classes:
        weight = np.exp(-decomposition.kappa * (t - line.k / sigma) ** 2)
        total += weight * line.profile.eval(u / sigma - line.shift)
    return total
