'''Settings access for the numerical packages.

The numerical modules are usable without a configured Django project (for
example from a notebook), so they never touch ``django.conf.settings`` at
import time. :func:`setting` reads the value lazily and falls back to the
documented default.
'''

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured


def setting(name, default):
    '''Returns the configured value of `name` or `default`.

    :param name: The settings attribute, e.g. ``'TRUNC_TOL'``.
    :param default: Used when the setting is absent or Django has no
                    settings module.
    '''
    try:
        return getattr(settings, name, default)
    except ImproperlyConfigured:
        return default
