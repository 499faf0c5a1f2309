"""
Every management command exits with one of the codes below, so batch
scripts can tell a bad configuration apart from a failed computation.

:attr:`EXIT_OK`: The run finished and every artifact was written.

:attr:`EXIT_OPERATION_ERROR`: A module operation raised. This covers
precondition failures, accuracy errors and infeasible densities alike.

:attr:`EXIT_CONFIG_ERROR`: The run configuration or one of its point set
descriptors did not parse, or it points at something missing. Nothing was
computed.
"""

from gaussampling.utils.exceptions import ConfigError, DescriptorParseError

EXIT_OK = 0
EXIT_OPERATION_ERROR = 1
EXIT_CONFIG_ERROR = 2


def exit_code_for(exc):
    '''Maps an exception to the exit code the CLI reports for it.'''
    if isinstance(exc, (ConfigError, DescriptorParseError)):
        return EXIT_CONFIG_ERROR
    return EXIT_OPERATION_ERROR
