'''
Line-oriented text format for Gaussian series.

The first line is the header ``dim a scale p``; every further line holds one
coefficient, ``n re im`` in 1D or ``n m re im`` in 2D. Floats are printed
with ``repr`` so that a dump followed by a load reproduces every bit.
Blank lines and lines starting with ``#`` are ignored.
'''
import numpy as np

from gaussampling.core_series.grids import CoeffGrid
from gaussampling.core_series.series import GaussSeriesFunction
from gaussampling.utils.exceptions import InvalidParameterError


def _float_repr(value):
    return repr(float(value))


def dumps(f):
    '''Serialises a :class:`GaussSeriesFunction` to text.

    Zero coefficients inside the support are written too, so the support
    survives the round trip.
    '''
    grid = f.coeffs
    lines = ['%d %s %s %s' % (grid.dim, _float_repr(f.a), _float_repr(f.scale),
                              _float_repr(grid.declared_p))]
    values = np.asarray(grid.values, dtype=complex)
    for index in np.ndindex(*values.shape):
        position = ' '.join(str(o + i) for o, i in zip(grid.origin, index))
        value = values[index]
        lines.append('%s %s %s' % (position, _float_repr(value.real), _float_repr(value.imag)))
    return '\n'.join(lines) + '\n'


def loads(text, trunc_tol=None):
    '''Parses the output of :func:`dumps`.

    :raises: :class:`InvalidParameterError` naming the offending line.
    '''
    rows = []
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith('#'):
            rows.append((number, line.split()))
    if not rows:
        raise InvalidParameterError("coefficient file is empty")
    number, header = rows[0]
    if len(header) != 4:
        raise InvalidParameterError("line %d: header must be 'dim a scale p'" % number)
    try:
        dim = int(header[0])
        a, scale, p = (float(token) for token in header[1:])
    except ValueError:
        raise InvalidParameterError("line %d: malformed header %r" % (number, ' '.join(header)))
    if dim not in (1, 2):
        raise InvalidParameterError("line %d: dim must be 1 or 2, got %d" % (number, dim))
    entries = {}
    for number, tokens in rows[1:]:
        if len(tokens) != dim + 2:
            raise InvalidParameterError("line %d: expected %d fields, got %d"
                                        % (number, dim + 2, len(tokens)))
        try:
            index = tuple(int(token) for token in tokens[:dim])
            value = complex(float(tokens[dim]), float(tokens[dim + 1]))
        except ValueError:
            raise InvalidParameterError("line %d: malformed coefficient row" % number)
        key = index[0] if dim == 1 else index
        if key in entries:
            raise InvalidParameterError("line %d: duplicate index %r" % (number, index))
        entries[key] = value
    if not entries:
        raise InvalidParameterError("coefficient file has no coefficients")
    if all(value.imag == 0.0 for value in entries.values()):
        entries = {key: value.real for key, value in entries.items()}
    grid = CoeffGrid.from_dict(entries, declared_p=p)
    return GaussSeriesFunction(a, grid, scale, trunc_tol)
