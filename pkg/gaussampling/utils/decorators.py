'''
Module to for sharing decorators between all modules
'''
import time
from functools import wraps

from gaussampling.loggers import debug_log, error_log
from gaussampling.utils.exceptions import GaussSamplingError


def logged_operation(func):

    """Decorator for the public operations of the numerical packages.

    Logs the call and its wall time to the debug log. Library errors are
    written to the error log with the operation name and then re-raised
    untouched, so callers still see the precise exception class.

    :param func: Any public operation.
    :returns: The wrapped operation.
    :raises: whatever `func` raises
    """

    name = '%s.%s' % (func.__module__.rsplit('.', 1)[-1], func.__name__)

    @wraps(func)
    def inner(*args, **kwargs):
        '''implementation'''
        started = time.perf_counter()
        try:
            result = func(*args, **kwargs)
        except GaussSamplingError as exc:
            error_log.error("%s failed: %s: %s", name, type(exc).__name__, exc)
            raise
        debug_log.debug("%s finished in %.3fs", name, time.perf_counter() - started)
        return result
    return inner
