'''
Finitely supported coefficient arrays c_n (1D) and c_{n,m} (2D).

A grid is a dense numpy array plus the integer index of its first entry, so
index ``(n, m)`` lives at ``values[n - origin[0], m - origin[1]]``.
'''
from dataclasses import dataclass

import numpy as np

from gaussampling.utils.exceptions import InvalidParameterError


def _check_p(p):
    p = float(p)
    if not (p >= 1.0):
        raise InvalidParameterError("norm exponent must lie in [1, inf], got %r" % p)
    return p


@dataclass(frozen=True, eq=False)
class CoeffGrid:
    '''Coefficients over an integer interval or rectangle.

    :param origin: Smallest index along each axis.
    :param values: Real or complex array with one axis per dimension.
    :param declared_p: The exponent used by :meth:`norm` when none is given.
    '''
    origin: tuple
    values: np.ndarray
    declared_p: float = 2.0

    def __post_init__(self):
        values = np.asarray(self.values)
        if values.dtype.kind not in 'fc':
            values = values.astype(float)
        if values.ndim not in (1, 2):
            raise InvalidParameterError("coefficient grids are 1D or 2D, got %dD" % values.ndim)
        if values.size == 0:
            raise InvalidParameterError("coefficient support must be nonempty")
        origin = tuple(int(o) for o in np.atleast_1d(self.origin))
        if len(origin) != values.ndim:
            raise InvalidParameterError("origin %r does not match a %dD grid" % (origin, values.ndim))
        values = values.copy()
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)
        object.__setattr__(self, 'origin', origin)
        object.__setattr__(self, 'declared_p', _check_p(self.declared_p))

    @classmethod
    def from_dict(cls, entries, declared_p=2.0):
        '''Builds the smallest grid holding `entries`, a mapping from an
        integer (1D) or an integer pair (2D) to a coefficient.'''
        if not entries:
            raise InvalidParameterError("coefficient support must be nonempty")
        keys = [np.atleast_1d(key).astype(int) for key in entries]
        lows = np.min(keys, axis=0)
        highs = np.max(keys, axis=0)
        dtype = complex if any(np.iscomplexobj(v) for v in entries.values()) else float
        values = np.zeros(tuple(highs - lows + 1), dtype=dtype)
        for key, value in zip(keys, entries.values()):
            values[tuple(key - lows)] = value
        return cls(tuple(lows), values, declared_p)

    @classmethod
    def zeros(cls, support, dtype=float, declared_p=2.0):
        '''A zero grid over `support`: ``(lo, hi)`` or ``((lo, hi), (lo, hi))``.'''
        bounds = _normalise_support(support)
        shape = tuple(hi - lo + 1 for lo, hi in bounds)
        return cls(tuple(lo for lo, _ in bounds), np.zeros(shape, dtype=dtype), declared_p)

    @classmethod
    def single(cls, index, value=1.0, declared_p=2.0):
        '''A grid with one coefficient at `index`.'''
        index = tuple(np.atleast_1d(index).astype(int))
        return cls(index, np.full((1,) * len(index), value), declared_p)

    @property
    def dim(self):
        return self.values.ndim

    @property
    def support(self):
        '''Inclusive ``(lo, hi)`` bounds, one pair per axis.'''
        return tuple((o, o + s - 1) for o, s in zip(self.origin, self.values.shape))

    def indices(self):
        '''Integer index arrays matching ``values`` elementwise.'''
        axes = [np.arange(o, o + s) for o, s in zip(self.origin, self.values.shape)]
        return np.meshgrid(*axes, indexing='ij')

    def get(self, index):
        '''The coefficient at `index`, zero outside the support.'''
        index = np.atleast_1d(index).astype(int)
        offset = index - np.asarray(self.origin)
        if np.any(offset < 0) or np.any(offset >= self.values.shape):
            return 0.0
        return self.values[tuple(offset)]

    def norm(self, p=None):
        '''The l^p norm over the support, ``p=inf`` for the maximum.'''
        p = self.declared_p if p is None else _check_p(p)
        mags = np.abs(self.values).ravel()
        if np.isinf(p):
            return float(mags.max())
        if p == 1.0:
            return float(mags.sum())
        if p == 2.0:
            return float(np.sqrt(np.sum(mags * mags)))
        scale = mags.max()
        if scale == 0.0:
            return 0.0
        return float(scale * np.sum((mags / scale) ** p) ** (1.0 / p))

    def is_zero(self):
        return not np.any(self.values)

    def shifted(self, offset):
        '''The same coefficients with every index moved by `offset`.'''
        offset = np.atleast_1d(offset).astype(int)
        return CoeffGrid(tuple(np.asarray(self.origin) + offset), self.values, self.declared_p)

    def padded(self, support):
        '''The same coefficients on a larger support, filled with zeros.'''
        bounds = _normalise_support(support)
        for (lo, hi), (own_lo, own_hi) in zip(bounds, self.support):
            if lo > own_lo or hi < own_hi:
                raise InvalidParameterError(
                    "padding support %r does not contain %r" % (bounds, self.support))
        grid = np.zeros(tuple(hi - lo + 1 for lo, hi in bounds), dtype=self.values.dtype)
        start = tuple(own - lo for own, (lo, _) in zip(self.origin, bounds))
        grid[tuple(slice(s, s + n) for s, n in zip(start, self.values.shape))] = self.values
        return CoeffGrid(tuple(lo for lo, _ in bounds), grid, self.declared_p)

    def scaled(self, factor):
        return CoeffGrid(self.origin, self.values * factor, self.declared_p)

    def __add__(self, other):
        if other.dim != self.dim:
            raise InvalidParameterError("cannot add a %dD grid to a %dD grid" % (other.dim, self.dim))
        bounds = tuple((min(a[0], b[0]), max(a[1], b[1]))
                       for a, b in zip(self.support, other.support))
        left = self.padded(bounds).values
        right = other.padded(bounds).values
        return CoeffGrid(tuple(lo for lo, _ in bounds), left + right, self.declared_p)


def _normalise_support(support):
    support = np.asarray(support, dtype=int)
    if support.ndim == 1:
        support = support[None, :]
    bounds = tuple((int(lo), int(hi)) for lo, hi in support)
    for lo, hi in bounds:
        if hi < lo:
            raise InvalidParameterError("empty support (%d, %d)" % (lo, hi))
    return bounds
