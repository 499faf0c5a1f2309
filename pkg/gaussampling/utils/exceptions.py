'''
Every failure an operation can report is one of the classes below. The CLI
maps :class:`ConfigError` and :class:`DescriptorParseError` to exit code 2
and everything else deriving from :class:`GaussSamplingError` to exit code 1 (see
:mod:`gaussampling.utils.error_codes`).
'''


class GaussSamplingError(Exception):
    '''Base class of all errors raised by the library.'''


class InvalidParameterError(GaussSamplingError, ValueError):
    '''A parameter is outside its admissible range.'''


class UnsupportedDomainError(GaussSamplingError, ValueError):
    '''An argument lies outside the region where certificates hold.'''


class PreconditionError(GaussSamplingError):
    '''The inputs are valid on their own but unusable together.

    Extra diagnostics are passed as keyword arguments and kept as
    attributes, e.g. ``required_inflation``.
    '''

    def __init__(self, message, **diagnostics):
        super().__init__(message)
        self.diagnostics = diagnostics
        for key, value in diagnostics.items():
            setattr(self, key, value)


class UndefinedSeparationError(PreconditionError):
    '''Fewer than two points in the window.'''


class AccuracyError(PreconditionError):
    '''A refinement loop or a computed result missed its tolerance.'''


class RankError(GaussSamplingError):
    '''A least-squares problem has no usable column.'''


class InfeasibleDensityError(PreconditionError):
    '''The measured density forbids the requested construction.'''


class RangeTooSmallError(PreconditionError):
    '''A coefficient range is too short to contain the significant mass.'''


class DescriptorParseError(GaussSamplingError, ValueError):
    '''A point set descriptor could not be parsed.'''

    def __init__(self, message, column=None):
        if column is not None:
            message = '%s (column %d)' % (message, column)
        super().__init__(message)
        self.column = column


class ConfigError(GaussSamplingError):
    '''A run configuration could not be parsed or is incomplete.'''

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = 'line %d, column %d: %s' % (line, column or 1, message)
        super().__init__(message)
        self.line = line
        self.column = column
