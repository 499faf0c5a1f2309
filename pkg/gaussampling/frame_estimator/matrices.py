'''
Finite sections of the sampling operator ``c -> (f(lambda))_lambda``.

Row ``i`` belongs to sample ``lambda_i``; column ``j`` to the coefficient
index ``k_j`` of the integer box, in lexicographic order; the entry is
``exp(-a s^2 |lambda_i - k_j|^2)``, optionally multiplied by a row weight.

Four storages exist:

``dense``
    a numpy array, used up to ``DENSE_SVD_MAX_COLUMNS`` columns.
``sparse``
    a CSR matrix without the entries below ``SPARSE_ENTRY_FLOOR``.
``gram``
    only ``M^T M``, accumulated over thresholded sparse row blocks, for very
    tall matrices such as trajectory discretisations.
``triangular``
    only the ``R`` factor of ``M = QR``, updated one row block at a time. It
    keeps the singular values of ``M`` and of any column subset, so small
    lower bounds survive that the Gram matrix loses to squaring.
'''
from dataclasses import dataclass, field

import numpy as np
from scipy import linalg, sparse

from gaussampling.loggers import debug_log
from gaussampling.utils.conf import setting
from gaussampling.utils.decorators import logged_operation
from gaussampling.utils.exceptions import InvalidParameterError, PreconditionError
from gaussampling.utils.writers import format_cell

DENSE, SPARSE, GRAM, TRIANGULAR = 'dense', 'sparse', 'gram', 'triangular'
_ROW_BLOCK = 2048


def normalise_window(window, dim):
    '''``((lo, hi), ...)`` integer bounds with one pair per axis.'''
    window = np.asarray(window, dtype=int)
    if window.ndim == 1:
        window = np.tile(window, (dim, 1)) if window.size == 2 else window.reshape(-1, 2)
    if window.shape != (dim, 2):
        raise InvalidParameterError("coefficient window %r does not match %dD samples"
                                    % (window.tolist(), dim))
    if np.any(window[:, 1] < window[:, 0]):
        raise InvalidParameterError("coefficient window %r is empty" % window.tolist())
    return tuple((int(lo), int(hi)) for lo, hi in window)


def centered_window(size, dim):
    '''The box ``[-N/2, N/2]^dim`` of integers.'''
    half = int(size) // 2
    return ((-half, half),) * dim


@dataclass(frozen=True, eq=False)
class SamplingMatrix:
    '''A finite section with the metadata needed to recompute every entry.'''
    storage: str
    data: object
    samples: np.ndarray
    a: float
    scale: float
    coeff_window: tuple
    weights: np.ndarray = None
    margin: float = field(default_factory=lambda: setting('SAMPLE_MARGIN', 5))

    @classmethod
    def from_array(cls, matrix, coeff_window=None):
        '''Wraps a synthetic dense matrix; columns are numbered ``0..n-1``.'''
        matrix = np.asarray(matrix, dtype=float)
        if matrix.ndim != 2 or 0 in matrix.shape:
            raise InvalidParameterError("a sampling matrix needs at least one row and column")
        if coeff_window is None:
            coeff_window = ((0, matrix.shape[1] - 1),)
        return cls(DENSE, matrix, np.zeros((matrix.shape[0], 1)), 1.0, 1.0,
                   normalise_window(coeff_window, 1), None, 0)

    @property
    def dim(self):
        return len(self.coeff_window)

    @property
    def shape(self):
        columns = int(np.prod([hi - lo + 1 for lo, hi in self.coeff_window]))
        return (len(self.samples), columns)

    @property
    def kappa(self):
        return self.a * self.scale * self.scale

    def column_indices(self):
        '''``(columns, dim)`` integer indices in column order.'''
        axes = [np.arange(lo, hi + 1) for lo, hi in self.coeff_window]
        grids = np.meshgrid(*axes, indexing='ij')
        return np.column_stack([g.ravel() for g in grids])

    def interior_columns(self, margin):
        '''Positions of the columns at least `margin` steps inside the window.'''
        indices = self.column_indices()
        lows = np.array([lo for lo, _ in self.coeff_window]) + margin
        highs = np.array([hi for _, hi in self.coeff_window]) - margin
        inside = np.all((indices >= lows) & (indices <= highs), axis=1)
        return np.flatnonzero(inside)

    def entry(self, row, column):
        '''The formula value of one entry, independent of the storage.'''
        index = self.column_indices()[column]
        diff = np.atleast_1d(self.samples[row]) - index
        value = np.exp(-self.kappa * float(np.dot(diff, diff)))
        if self.weights is not None:
            value *= self.weights[row]
        return value

    def dense(self):
        if self.storage == DENSE:
            return self.data
        if self.storage == SPARSE:
            return self.data.toarray()
        raise PreconditionError("a %s sampling matrix keeps no rows" % self.storage)

    def gram(self):
        if self.storage == GRAM:
            return self.data
        if self.storage == TRIANGULAR:
            return self.data.T @ self.data
        return self.data.T @ self.data


def _factors(kappa, coords, lo, hi):
    diff = coords[:, None] - np.arange(lo, hi + 1)[None, :]
    return np.exp(-kappa * diff * diff)


def _block(kappa, samples, coeff_window, weights):
    '''Dense rows for `samples`; 2D rows are outer products of the axis factors.'''
    first = _factors(kappa, samples[:, 0], *coeff_window[0])
    if len(coeff_window) == 1:
        rows = first
    else:
        second = _factors(kappa, samples[:, 1], *coeff_window[1])
        rows = (first[:, :, None] * second[:, None, :]).reshape(len(samples), -1)
    if weights is not None:
        rows = rows * weights[:, None]
    return rows


@logged_operation
def assemble(a, scale, samples, coeff_window, weights=None, storage=None):
    '''Builds the :class:`SamplingMatrix` of `samples` against `coeff_window`.

    :param samples: ``(P,)`` for 1D or ``(P, 2)`` for 2D, kept in input order.
    :param coeff_window: ``(lo, hi)`` or ``((lo, hi), (lo, hi))``.
    :param weights: Optional positive row weights.
    :param storage: ``dense``, ``sparse``, ``gram`` or ``triangular``; by
                    default dense up to ``DENSE_SVD_MAX_COLUMNS`` columns and
                    sparse above.
    '''
    if not np.isfinite(a) or a <= 0:
        raise InvalidParameterError("shape parameter a must be positive, got %r" % a)
    if not np.isfinite(scale) or scale <= 0:
        raise InvalidParameterError("scale must be positive, got %r" % scale)
    samples = np.asarray(samples, dtype=float)
    if samples.ndim == 1:
        samples = samples[:, None]
    if samples.ndim != 2 or samples.shape[1] not in (1, 2):
        raise InvalidParameterError("samples must be 1D points or 2D pairs")
    if len(samples) == 0:
        raise InvalidParameterError("at least one sample is needed")
    window = normalise_window(coeff_window, samples.shape[1])
    if weights is not None:
        weights = np.broadcast_to(np.asarray(weights, dtype=float), (len(samples),)).copy()
        if np.any(weights <= 0):
            raise InvalidParameterError("row weights must be positive")
    kappa = a * scale * scale
    columns = int(np.prod([hi - lo + 1 for lo, hi in window]))
    if storage is None:
        storage = SPARSE if columns > setting('DENSE_SVD_MAX_COLUMNS', 4000) else DENSE
    if storage == DENSE:
        data = _block(kappa, samples, window, weights)
    elif storage == SPARSE:
        floor = setting('SPARSE_ENTRY_FLOOR', 1e-18)
        blocks = []
        for start in range(0, len(samples), _ROW_BLOCK):
            rows = _block(kappa, samples[start:start + _ROW_BLOCK], window,
                          None if weights is None else weights[start:start + _ROW_BLOCK])
            rows[rows < floor] = 0.0
            blocks.append(sparse.csr_matrix(rows))
        data = sparse.vstack(blocks, format='csr')
    elif storage == GRAM:
        floor = setting('SPARSE_ENTRY_FLOOR', 1e-18)
        data = np.zeros((columns, columns))
        for start in range(0, len(samples), _ROW_BLOCK):
            rows = _block(kappa, samples[start:start + _ROW_BLOCK], window,
                          None if weights is None else weights[start:start + _ROW_BLOCK])
            rows[rows < floor] = 0.0
            rows = sparse.csr_matrix(rows)
            data += (rows.T @ rows).toarray()
    elif storage == TRIANGULAR:
        data = np.zeros((0, columns))
        step = max(_ROW_BLOCK, 2 * columns)
        for start in range(0, len(samples), step):
            rows = _block(kappa, samples[start:start + step], window,
                          None if weights is None else weights[start:start + step])
            data = linalg.qr(np.vstack((data, rows)), mode='r', check_finite=False)[0][:columns]
    else:
        raise InvalidParameterError("unknown storage %r" % storage)
    debug_log.debug("assembled %s matrix %dx%d (a=%g, scale=%g)",
                    storage, len(samples), columns, a, scale)
    return SamplingMatrix(storage, data, samples, float(a), float(scale), window, weights)


def export_matrix(matrix, stream):
    '''Writes `matrix` as text: one ``#`` header line of metadata, then one
    line per sample with the sample coordinates followed by the entries.'''
    dense = matrix.dense()
    rows, columns = dense.shape
    window = ' '.join('%d:%d' % bounds for bounds in matrix.coeff_window)
    stream.write('# rows=%d columns=%d dim=%d a=%s scale=%s window=%s\n'
                 % (rows, columns, matrix.dim, format_cell(matrix.a),
                    format_cell(matrix.scale), window))
    for sample, row in zip(matrix.samples, dense):
        cells = [format_cell(x) for x in sample] + [format_cell(x) for x in row]
        stream.write(' '.join(cells) + '\n')
