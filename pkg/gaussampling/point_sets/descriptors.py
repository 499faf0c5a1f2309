'''
Immutable descriptors of separated sets on the real line.

Every descriptor answers :meth:`PointSet1D.points` for a closed window with a
sorted array. Generation always covers the window inflated by ``2/delta``
and is filtered afterwards, so descriptor arithmetic near the window edges
never drops points.
'''
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from gaussampling.utils.exceptions import InvalidParameterError

#: points closer than this are the same point
MATCH_TOL = 1e-12
#: separation of unions and explicit sets is measured on this window
SCAN_WINDOW = (-200.0, 200.0)


class PointSet1D:
    '''Base class of the descriptors.'''

    def _generate(self, lo, hi):
        '''Points covering at least ``[lo, hi]``; may return more.'''
        raise NotImplementedError

    @property
    def delta(self):
        '''A lower bound of the separation, ``None`` if it is undefined.'''
        raise NotImplementedError

    @property
    def density_limit(self):
        '''The exact Beurling density when it is known in closed form.'''
        return None

    def points(self, window):
        lo, hi = (float(x) for x in window)
        if hi < lo:
            raise InvalidParameterError("empty window [%g, %g]" % (lo, hi))
        delta = self.delta
        pad = 2.0 / delta if delta else 1.0
        raw = np.sort(np.asarray(self._generate(lo - pad, hi + pad), dtype=float))
        return raw[(raw >= lo) & (raw <= hi)]

    def describe(self):
        '''The descriptor text that parses back to an equal set.'''
        raise NotImplementedError

    def __str__(self):
        return self.describe()


def _fmt(value):
    return repr(float(value))


@dataclass(frozen=True)
class Progression(PointSet1D):
    '''``alpha * Z + beta``.'''
    alpha: float
    beta: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.alpha) or self.alpha <= 0:
            raise InvalidParameterError("progression step must be positive, got %r" % self.alpha)
        if not math.isfinite(self.beta):
            raise InvalidParameterError("progression offset must be finite")
        object.__setattr__(self, 'alpha', float(self.alpha))
        object.__setattr__(self, 'beta', float(self.beta))

    def indices(self, lo, hi):
        first = math.ceil((lo - self.beta) / self.alpha)
        last = math.floor((hi - self.beta) / self.alpha)
        return np.arange(first, last + 1)

    def _generate(self, lo, hi):
        return self.beta + self.alpha * self.indices(lo, hi)

    @property
    def delta(self):
        return self.alpha

    @property
    def density_limit(self):
        return 1.0 / self.alpha

    def describe(self):
        return 'prog %s %s' % (_fmt(self.alpha), _fmt(self.beta))


@dataclass(frozen=True)
class Empty(PointSet1D):
    '''The empty set.'''

    def _generate(self, lo, hi):
        return np.zeros(0)

    @property
    def delta(self):
        return None

    @property
    def density_limit(self):
        return 0.0

    def describe(self):
        return 'empty'


def _min_gap(values):
    if len(values) < 2:
        return None
    return float(np.min(np.diff(values)))


def _dedupe(values):
    values = np.sort(np.asarray(values, dtype=float))
    if values.size < 2:
        return values
    keep = np.concatenate(([True], np.diff(values) > MATCH_TOL))
    return values[keep]


@dataclass(frozen=True)
class Explicit(PointSet1D):
    '''A finite list of points.'''
    values: tuple

    def __post_init__(self):
        values = _dedupe(self.values)
        if not np.all(np.isfinite(values)):
            raise InvalidParameterError("explicit points must be finite")
        object.__setattr__(self, 'values', tuple(values.tolist()))

    def _generate(self, lo, hi):
        return np.asarray(self.values)

    @property
    def delta(self):
        return _min_gap(self.values)

    @property
    def density_limit(self):
        return 0.0

    def describe(self):
        return 'explicit %s' % ' '.join(_fmt(v) for v in self.values)


@dataclass(frozen=True)
class Union(PointSet1D):
    '''A finite union; coinciding points are kept once.'''
    parts: tuple

    def __post_init__(self):
        if not self.parts:
            raise InvalidParameterError("a union needs at least one part")
        object.__setattr__(self, 'parts', tuple(self.parts))

    def _generate(self, lo, hi):
        return _dedupe(np.concatenate([part.points((lo, hi)) for part in self.parts]))

    @cached_property
    def delta(self):
        merged = np.concatenate([part.points(SCAN_WINDOW) for part in self.parts])
        return _min_gap(_dedupe(merged))

    def describe(self):
        return 'union { %s }' % ' ; '.join(part.describe() for part in self.parts)


@dataclass(frozen=True)
class Puncture(PointSet1D):
    '''`base` with finitely many points removed.'''
    base: PointSet1D
    removed: tuple

    def __post_init__(self):
        object.__setattr__(self, 'removed', tuple(float(x) for x in self.removed))

    def _generate(self, lo, hi):
        raw = self.base.points((lo, hi))
        if not self.removed or raw.size == 0:
            return raw
        removed = np.asarray(self.removed)
        hit = np.min(np.abs(raw[:, None] - removed[None, :]), axis=1) <= MATCH_TOL
        return raw[~hit]

    @property
    def delta(self):
        return self.base.delta

    @property
    def density_limit(self):
        return self.base.density_limit

    def describe(self):
        return 'puncture { %s } %s' % (self.base.describe(),
                                       ' '.join(_fmt(v) for v in self.removed))


@dataclass(frozen=True)
class Perturbation(PointSet1D):
    '''A progression whose k-th point moves by ``offsets[k mod len(offsets)]``.'''
    base: Progression
    offsets: tuple

    def __post_init__(self):
        if not isinstance(self.base, Progression):
            raise InvalidParameterError("perturbations are defined on progressions")
        offsets = tuple(float(x) for x in self.offsets)
        if not offsets:
            raise InvalidParameterError("a perturbation needs at least one offset")
        if 2.0 * max(abs(x) for x in offsets) >= self.base.alpha:
            raise InvalidParameterError(
                "offsets must stay below half the step %g to keep the set separated"
                % self.base.alpha)
        object.__setattr__(self, 'offsets', offsets)

    @classmethod
    def random(cls, base, bound, count, seed):
        '''Offsets drawn uniformly from ``[-bound, bound]``.'''
        rng = np.random.default_rng(seed)
        return cls(base, tuple(rng.uniform(-bound, bound, count).tolist()))

    def _generate(self, lo, hi):
        reach = max(abs(x) for x in self.offsets)
        index = self.base.indices(lo - reach, hi + reach)
        shift = np.asarray(self.offsets)[np.mod(index, len(self.offsets))]
        return self.base.beta + self.base.alpha * index + shift

    @property
    def delta(self):
        return self.base.alpha - 2.0 * max(abs(x) for x in self.offsets)

    @property
    def density_limit(self):
        return self.base.density_limit

    def describe(self):
        return 'perturb { %s } offsets=%s' % (self.base.describe(),
                                              ','.join(_fmt(v) for v in self.offsets))


@dataclass(frozen=True)
class Affine(PointSet1D):
    '''``factor * base + shift``.'''
    base: PointSet1D
    factor: float = 1.0
    shift: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.factor) or self.factor == 0:
            raise InvalidParameterError("affine factor must be finite and nonzero")

    def _generate(self, lo, hi):
        ends = sorted(((lo - self.shift) / self.factor, (hi - self.shift) / self.factor))
        return self.factor * self.base.points(ends) + self.shift

    @property
    def delta(self):
        delta = self.base.delta
        return None if delta is None else abs(self.factor) * delta

    @property
    def density_limit(self):
        limit = self.base.density_limit
        return None if limit is None else limit / abs(self.factor)

    def describe(self):
        return 'affine { %s } %s %s' % (self.base.describe(), _fmt(self.factor),
                                        _fmt(self.shift))


def affine(base, factor=1.0, shift=0.0):
    '''``factor * base + shift``, simplified where the result has a closed form.'''
    factor, shift = float(factor), float(shift)
    if factor == 1.0 and shift == 0.0:
        return base
    if isinstance(base, Empty):
        return base
    if isinstance(base, Progression):
        return Progression(abs(factor) * base.alpha, factor * base.beta + shift)
    if isinstance(base, Explicit):
        return Explicit(tuple(factor * v + shift for v in base.values))
    if isinstance(base, Puncture):
        return Puncture(affine(base.base, factor, shift),
                        tuple(factor * v + shift for v in base.removed))
    if isinstance(base, Union):
        return Union(tuple(affine(part, factor, shift) for part in base.parts))
    if isinstance(base, Affine):
        return affine(base.base, factor * base.factor, factor * base.shift + shift)
    return Affine(base, factor, shift)


def shifted(base, shift):
    return affine(base, 1.0, shift)


def scaled(base, factor):
    return affine(base, factor, 0.0)
