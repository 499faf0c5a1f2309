'''
Line families clipped to a box, and ``p``-th power arc-length integrals of
planar Gaussian series along them.
'''
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.integrate import simpson

from gaussampling.loggers import accuracy_log
from gaussampling.point_sets.slanted import normalise_box
from gaussampling.utils.conf import setting
from gaussampling.utils.decorators import logged_operation
from gaussampling.utils.exceptions import AccuracyError, InvalidParameterError

_PARALLEL_TOL = 1e-15


@dataclass(frozen=True)
class Segment:
    '''The part ``offset v + t v_perp``, ``start <= t <= end``, of one line.'''
    offset: float
    start: float
    end: float

    @property
    def length(self):
        return self.end - self.start


@dataclass(frozen=True, eq=False)
class TrajectoryWindowed:
    '''A :class:`LineFamily` restricted to the closed box `window`.'''
    family: object
    window: tuple
    step: float = None

    def __post_init__(self):
        box = normalise_box(self.window)
        if not np.all(np.isfinite(box)):
            raise InvalidParameterError("trajectory windows must be finite")
        step = setting('QUADRATURE_STEP', 0.05) if self.step is None else float(self.step)
        if step <= 0:
            raise InvalidParameterError("quadrature step must be positive, got %r" % step)
        object.__setattr__(self, 'window', tuple(tuple(float(x) for x in row) for row in box))
        object.__setattr__(self, 'step', step)

    @cached_property
    def segments(self):
        '''Clipped segments of positive length, by increasing offset.'''
        offsets = self.family.lines(self.window)
        normal, tangent = self.family.normal, self.family.tangent
        start = np.full(offsets.shape, -np.inf)
        end = np.full(offsets.shape, np.inf)
        keep = np.ones(offsets.shape, dtype=bool)
        for axis, (lo, hi) in enumerate(self.window):
            base = offsets * normal[axis]
            direction = tangent[axis]
            if abs(direction) < _PARALLEL_TOL:
                keep &= (base >= lo) & (base <= hi)
                continue
            first, second = (lo - base) / direction, (hi - base) / direction
            start = np.maximum(start, np.minimum(first, second))
            end = np.minimum(end, np.maximum(first, second))
        keep &= end > start
        return tuple(Segment(float(g), float(s), float(e))
                     for g, s, e in zip(offsets[keep], start[keep], end[keep]))

    @property
    def length(self):
        return float(sum(segment.length for segment in self.segments))

    def segment_points(self, segment, count):
        ts = np.linspace(segment.start, segment.end, count)
        return ts, self.family.line_points(segment.offset, ts)

    def dense_samples(self, step=None):
        '''Points along every segment at spacing at most `step`.'''
        step = step or self.step
        chunks = [self.segment_points(s, max(2, int(np.ceil(s.length / step)) + 1))[1]
                  for s in self.segments]
        return np.vstack(chunks) if chunks else np.zeros((0, 2))

    def describe(self):
        return '%s in %s' % (self.family.describe(), self.window)


def _integral(f, trajectory, power, step):
    spans, chunks = [], []
    for segment in trajectory.segments:
        count = max(2, int(np.ceil(segment.length / step))) + 1
        ts, points = trajectory.segment_points(segment, count)
        spans.append(ts)
        chunks.append(points)
    if not chunks:
        return 0.0
    values = np.abs(f.eval(np.vstack(chunks))) ** power
    total, offset = 0.0, 0
    for ts in spans:
        total += simpson(values[offset:offset + len(ts)], x=ts)
        offset += len(ts)
    return float(total)


@logged_operation
def line_integral_p(f, trajectory, p):
    '''``int |f|^p ds`` over all clipped segments of `trajectory`.

    Composite Simpson quadrature; the step is halved until two successive
    values agree to ``QUADRATURE_RTOL``.

    :raises: :class:`AccuracyError` carrying ``previous`` and ``last`` when
             the step would drop below ``QUADRATURE_FLOOR``.
    '''
    p = float(p)
    if not 1.0 <= p < np.inf:
        raise InvalidParameterError("p must lie in [1, inf), got %r" % p)
    if f.dim != 2:
        raise InvalidParameterError("line integrals need a 2D function")
    if f.coeffs.is_zero() or not trajectory.segments:
        return 0.0
    rtol = setting('QUADRATURE_RTOL', 1e-6)
    floor = setting('QUADRATURE_FLOOR', 1e-3)
    step = trajectory.step
    previous = current = _integral(f, trajectory, p, step)
    while step / 2.0 >= floor:
        step /= 2.0
        current = _integral(f, trajectory, p, step)
        if abs(current - previous) <= rtol * abs(current):
            accuracy_log.debug("line integral converged at step %g: %.12g", step, current)
            return current
        previous = current
    raise AccuracyError("line integral did not settle before the step floor %g" % floor,
                        previous=previous, last=current)
