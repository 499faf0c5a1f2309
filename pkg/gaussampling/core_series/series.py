'''
Functions of the Gaussian shift-invariant spaces

    f(x)   = sum_n     c_n     exp(-a s^2 (x - n)^2)
    f(x,y) = sum_{n,m} c_{n,m} exp(-a s^2 ((x - n)^2 + (y - m)^2))

evaluated at real or complex arguments with a certified truncation error.

For every argument only the terms with ``a s^2 dist^2 <= -ln(tol) + margin``
are summed, where ``dist`` is measured from the real part of the argument.
The terms are visited in increasing distance from the integer point nearest
to the argument, so results do not depend on how the support was padded.
'''
from dataclasses import dataclass

import numpy as np

from gaussampling.core_series.grids import CoeffGrid
from gaussampling.loggers import accuracy_log
from gaussampling.utils.conf import setting
from gaussampling.utils.decorators import logged_operation
from gaussampling.utils.exceptions import (InvalidParameterError, PreconditionError,
                                           UnsupportedDomainError)

_EPS = np.finfo(float).eps
_HALF_DIAGONAL = np.sqrt(0.5)
# exp(kappa Im^2) must stay well inside the float range.
_GROWTH_LIMIT = np.log(np.finfo(float).max) - 60.0


@dataclass(frozen=True, eq=False)
class GaussSeriesFunction:
    '''A Gaussian series: shape `a`, dilation `scale` and coefficients.

    The generator is ``exp(-a * scale**2 * |x - n|**2)``, which covers the
    rescaled spaces V_{a sigma^2} and V_{a/sigma} with ``scale = sigma`` or
    ``1/sqrt(sigma)``.
    '''
    a: float
    coeffs: CoeffGrid
    scale: float = 1.0
    trunc_tol: float = None

    def __post_init__(self):
        if not np.isfinite(self.a) or self.a <= 0:
            raise InvalidParameterError("shape parameter a must be positive, got %r" % self.a)
        if not np.isfinite(self.scale) or self.scale <= 0:
            raise InvalidParameterError("scale must be positive, got %r" % self.scale)
        tol = setting('TRUNC_TOL', 1e-14) if self.trunc_tol is None else self.trunc_tol
        if not 0.0 < tol < 1.0:
            raise InvalidParameterError("trunc_tol must lie in (0, 1), got %r" % tol)
        object.__setattr__(self, 'a', float(self.a))
        object.__setattr__(self, 'scale', float(self.scale))
        object.__setattr__(self, 'trunc_tol', float(tol))

    @property
    def dim(self):
        return self.coeffs.dim

    @property
    def kappa(self):
        '''The effective Gaussian exponent ``a * scale**2``.'''
        return self.a * self.scale * self.scale

    @property
    def cutoff(self):
        '''Largest included ``kappa * dist**2``.'''
        return -np.log(self.trunc_tol) + setting('TRUNC_MARGIN', 5)

    @property
    def radius(self):
        '''Largest included distance between an argument and a lattice point.'''
        return float(np.sqrt(self.cutoff / self.kappa))

    def with_coeffs(self, coeffs):
        return GaussSeriesFunction(self.a, coeffs, self.scale, self.trunc_tol)

    def eval(self, points):
        '''Shorthand for :func:`evaluate` without certificates.'''
        return evaluate(self, points).values

    def __call__(self, points):
        return self.eval(points)


@dataclass(frozen=True)
class EvaluationResult:
    '''Values plus per-point error certificates.

    ``bounds`` covers both the omitted tail and floating point rounding of
    the included terms, so ``|exact - values| <= bounds`` elementwise.
    '''
    values: np.ndarray
    bounds: np.ndarray
    terms: np.ndarray


def _as_points(f, points):
    pts = np.asarray(points, dtype=complex)
    if f.dim == 1:
        pts = pts.reshape(-1)
    else:
        if pts.ndim == 1 and pts.size == 2:
            pts = pts.reshape(1, 2)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise InvalidParameterError("2D evaluation needs points of shape (P, 2), got %r"
                                        % (pts.shape,))
    if not np.all(np.isfinite(pts)):
        raise InvalidParameterError("evaluation points must be finite")
    strip = setting('COMPLEX_STRIP', 10.0)
    worst = float(np.max(np.abs(pts.imag))) if pts.size else 0.0
    if worst > strip:
        raise UnsupportedDomainError(
            "|Im z| = %.6g exceeds the supported strip |Im z| <= %g" % (worst, strip))
    growth = pts.imag ** 2 if f.dim == 1 else (pts.imag ** 2).sum(axis=1)
    if pts.size and f.kappa * float(growth.max()) > _GROWTH_LIMIT:
        raise UnsupportedDomainError(
            "a scale^2 |Im z|^2 = %.6g overflows the Gaussian terms (limit %.0f)"
            % (f.kappa * float(growth.max()), _GROWTH_LIMIT))
    return pts


def _offsets_1d(reach):
    '''0, -1, 1, -2, 2, ... up to +-reach.'''
    steps = [0]
    for j in range(1, reach + 1):
        steps.extend((-j, j))
    return np.asarray(steps, dtype=int)


def _offsets_2d(reach):
    '''Integer offsets in the square of half-width `reach`, by distance.'''
    axis = np.arange(-reach, reach + 1)
    jj, kk = np.meshgrid(axis, axis, indexing='ij')
    jj, kk = jj.ravel(), kk.ravel()
    order = np.lexsort((kk, jj, jj * jj + kk * kk))
    return jj[order], kk[order]


def _tail_bound(f, imag_sq):
    '''Upper bound of the omitted terms per unit coefficient magnitude.'''
    kappa, radius = f.kappa, f.radius
    shells = radius + np.arange(0, 200)
    weights = np.exp(-kappa * shells * shells)
    if f.dim == 1:
        per_shell = 2.0 * weights
    else:
        per_shell = np.pi * (1.0 + 2.0 * _HALF_DIAGONAL) * (2.0 * shells + 1.0) * weights
    return float(per_shell.sum()) * np.exp(kappa * imag_sq)


def _eval_chunk_1d(f, pts):
    kappa, cutoff = f.kappa, f.cutoff
    reach = int(np.ceil(f.radius)) + 1
    offsets = _offsets_1d(reach)
    (lo, hi), = f.coeffs.support
    real = pts.real
    nearest = np.rint(real).astype(int)
    index = nearest[:, None] + offsets[None, :]
    inside = (index >= lo) & (index <= hi)
    dist = pts.real[:, None] - index
    keep = inside & (kappa * dist * dist <= cutoff)
    coeff = f.coeffs.values[np.clip(index - lo, 0, hi - lo)]
    coeff = np.where(keep, coeff, 0.0)
    shift = pts[:, None] - index
    terms = coeff * np.exp(-kappa * shift * shift)
    return terms, keep


def _eval_chunk_2d(f, pts):
    kappa, cutoff = f.kappa, f.cutoff
    reach = int(np.ceil(f.radius)) + 1
    dj, dk = _offsets_2d(reach)
    (lo_n, hi_n), (lo_m, hi_m) = f.coeffs.support
    near_x = np.rint(pts[:, 0].real).astype(int)
    near_y = np.rint(pts[:, 1].real).astype(int)
    n = near_x[:, None] + dj[None, :]
    m = near_y[:, None] + dk[None, :]
    inside = (n >= lo_n) & (n <= hi_n) & (m >= lo_m) & (m <= hi_m)
    dx = pts[:, 0].real[:, None] - n
    dy = pts[:, 1].real[:, None] - m
    keep = inside & (kappa * (dx * dx + dy * dy) <= cutoff)
    coeff = f.coeffs.values[np.clip(n - lo_n, 0, hi_n - lo_n), np.clip(m - lo_m, 0, hi_m - lo_m)]
    coeff = np.where(keep, coeff, 0.0)
    sx = pts[:, 0][:, None] - n
    sy = pts[:, 1][:, None] - m
    terms = coeff * np.exp(-kappa * (sx * sx + sy * sy))
    return terms, keep


def evaluate(f, points):
    '''Evaluates `f` at `points` with certificates.

    :param f: A :class:`GaussSeriesFunction`.
    :param points: Scalars (1D) or pairs (2D), real or complex.
    :returns: :class:`EvaluationResult`
    :raises: :class:`UnsupportedDomainError` for ``|Im| > COMPLEX_STRIP`` or when
             ``exp(a scale^2 |Im|^2)`` would overflow
    '''
    pts = _as_points(f, points)
    count = pts.shape[0]
    values = np.zeros(count, dtype=complex)
    bounds = np.zeros(count)
    nterms = np.zeros(count, dtype=int)
    if count == 0:
        return EvaluationResult(values, bounds, nterms)
    chunk = int(setting('EVAL_CHUNK', 512))
    coeff_max = float(np.abs(f.coeffs.values).max())
    for start in range(0, count, chunk):
        block = pts[start:start + chunk]
        if f.dim == 1:
            terms, keep = _eval_chunk_1d(f, block)
            imag_sq = block.imag ** 2
        else:
            terms, keep = _eval_chunk_2d(f, block)
            imag_sq = (block.imag ** 2).sum(axis=1)
        stop = start + block.shape[0]
        values[start:stop] = terms.sum(axis=1)
        included = keep.sum(axis=1)
        rounding = (included + 4) * 8.0 * _EPS * np.abs(terms).sum(axis=1)
        tail = np.array([_tail_bound(f, s) for s in imag_sq]) * coeff_max
        bounds[start:stop] = rounding + tail
        nterms[start:stop] = included
    if accuracy_log.isEnabledFor(10):
        accuracy_log.debug("evaluated %d points, worst certificate %.3e", count, bounds.max())
    return EvaluationResult(values, bounds, nterms)


def _grid_axes(window, step, dim):
    window = np.asarray(window, dtype=float)
    if window.ndim == 1:
        window = window[None, :]
    if window.shape != (dim, 2):
        raise InvalidParameterError("window %r does not match a %dD function" % (window.tolist(), dim))
    axes = []
    for lo, hi in window:
        if not hi >= lo:
            raise InvalidParameterError("empty window [%g, %g]" % (lo, hi))
        count = int(np.ceil((hi - lo) / step - 1e-9)) + 1
        axes.append(np.linspace(lo, hi, count))
    return window, axes


def _grid_points(axes):
    if len(axes) == 1:
        return axes[0]
    xx, yy = np.meshgrid(axes[0], axes[1], indexing='ij')
    return np.column_stack((xx.ravel(), yy.ravel()))


@logged_operation
def sup_norm_estimate(f, window, grid_step):
    '''The largest ``|f|`` on a uniform grid over `window`.

    This is a lower bound of the true supremum on the window; it converges
    as `grid_step` shrinks.

    :param window: ``(lo, hi)`` in 1D, ``((x0, x1), (y0, y1))`` in 2D.
    :param grid_step: At most 0.1.
    '''
    if not 0 < grid_step <= 0.1:
        raise PreconditionError("grid_step must lie in (0, 0.1], got %r" % grid_step)
    _, axes = _grid_axes(window, grid_step, f.dim)
    if f.coeffs.is_zero():
        return 0.0
    return float(np.abs(f.eval(_grid_points(axes))).max())


@dataclass(frozen=True)
class NormReport:
    '''Result of :func:`lp_norm_equivalence_check`.

    ``ratio`` is ``None`` when the coefficients vanish.
    '''
    p: float
    function_norm: float
    coefficient_norm: float
    ratio: float
    degenerate: bool
    step: float


def required_window(f):
    '''The coefficient support inflated by ``5 / sqrt(a scale^2)``.'''
    inflation = 5.0 / np.sqrt(f.kappa)
    return tuple((lo - inflation, hi + inflation) for lo, hi in f.coeffs.support)


@logged_operation
def lp_norm_equivalence_check(f, p, quadrature_window=None):
    '''Compares ``||f||_p`` (by quadrature) with ``||c||_p``.

    The quadrature is a Riemann sum on a uniform grid, which is spectrally
    accurate for Gaussian integrands.

    :param p: Exponent in ``[1, inf]``.
    :param quadrature_window: Box containing :func:`required_window`;
                              defaults to exactly that box.
    :raises: :class:`PreconditionError` with ``required_inflation`` and
             ``required_window`` when the window is too small.
    '''
    p = float(p)
    if not p >= 1.0:
        raise InvalidParameterError("norm exponent must lie in [1, inf], got %r" % p)
    needed = required_window(f)
    if quadrature_window is None:
        quadrature_window = needed
    window = np.asarray(quadrature_window, dtype=float)
    if window.ndim == 1:
        window = window[None, :]
    for (lo, hi), (need_lo, need_hi) in zip(window, needed):
        if lo > need_lo + 1e-12 or hi < need_hi - 1e-12:
            raise PreconditionError(
                "quadrature window %r must contain %r" % (window.tolist(), needed),
                required_inflation=5.0 / np.sqrt(f.kappa),
                required_window=needed)
    coefficient_norm = f.coeffs.norm(p)
    step = min(setting('QUADRATURE_STEP', 0.05), 0.25 / np.sqrt(f.kappa))
    if f.coeffs.is_zero():
        return NormReport(p, 0.0, 0.0, None, True, step)
    _, axes = _grid_axes(window, step, f.dim)
    spacing = np.prod([axis[1] - axis[0] if axis.size > 1 else 1.0 for axis in axes])
    mags = np.abs(f.eval(_grid_points(axes)))
    if np.isinf(p):
        function_norm = float(mags.max())
    else:
        function_norm = float((spacing * np.sum(mags ** p)) ** (1.0 / p))
    return NormReport(p, function_norm, coefficient_norm,
                      function_norm / coefficient_norm, False, step)
