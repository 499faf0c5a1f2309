"""Django settings for the gaussampling project.

Only the numerical tunables are specific to this project; the remainder is
the minimum Django needs to run management commands and the test runner.
Deployments override anything here from ``local_settings.py``.
"""
import logging
import os
import tempfile

ROOT_DIR = os.path.dirname(__file__)

# BACKEND DJANGO SETTINGS
SECRET_KEY = os.environ.get('GAUSSAMPLING_SECRET_KEY', 'gaussampling-not-a-web-app')
DEBUG = False
ALLOWED_HOSTS = []

# There is no storage, everything is computed on demand.
DATABASES = {}

INSTALLED_APPS = (
    'gaussampling.cli',
)

TEST_RUNNER = 'django.test.runner.DiscoverRunner'

USE_TZ = True
TIME_ZONE = 'UTC'

# logging
LOGLEVEL = logging.INFO
ROOT_LOG_DIR = os.environ.get(
    'GAUSSAMPLING_LOG_DIR',
    os.path.join(tempfile.gettempdir(), 'gaussampling'),
)

# Application settings.

# Relative truncation tolerance of Gaussian series evaluation and the
# extra exponent margin added to -ln(TRUNC_TOL) when choosing the terms.
TRUNC_TOL = 1e-14
TRUNC_MARGIN = 5
# Largest |Im z| accepted for complex arguments.
COMPLEX_STRIP = 10.0
# Points per vectorised evaluation block.
EVAL_CHUNK = 512

# Finite-section frame bound estimation.
INTERIOR_MARGIN = 5
SAMPLE_MARGIN = 5
DENSE_SVD_MAX_COLUMNS = 4000
ITERATIVE_SVD_TOL = 1e-8
SPARSE_ENTRY_FLOOR = 1e-18
# Matrix storage of the trajectory bound trends.
TRAJECTORY_STORAGE = 'triangular'

# Beurling density windows and the counting-function scan length.
DENSITY_RADII = [25, 50, 100, 200]
COUNTING_WINDOW = 200

# Laurent coefficient contour quadrature.
LAURENT_NODES = 256
LAURENT_MAX_NODES = 2 ** 18
LAURENT_RTOL = 1e-10
LAURENT_FAIL_RTOL = 1e-8
# Product factors are kept while |gamma| <= |Re z| + PRODUCT_TAIL / (2 a scale^2).
PRODUCT_TAIL = 40.0
# An annihilator whose residual or identity error exceeds this, relative to
# its sup-norm, is reported as failed.
ANNIHILATOR_RESIDUAL_TOL = 1e-8

# Arc-length quadrature along trajectories.
QUADRATURE_STEP = 0.05
QUADRATURE_FLOOR = 1e-3
QUADRATURE_RTOL = 1e-6

# Gabor translate sweeps.
TRANSLATE_STEP = 0.1

# Worker threads used by sweeps when the CLI does not say otherwise.
DEFAULT_THREADS = 1

try:
    from gaussampling.local_settings import *  # pylint: disable=W0401,W0614
except ImportError:
    pass
