# -*- coding: utf-8 -*-
#
# gaussampling documentation build configuration file.

import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "gaussampling.settings")

import django  # noqa: E402

django.setup()

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.todo',
    'sphinx.ext.coverage',
    'sphinx.ext.viewcode'
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'gaussampling'
copyright = u'2026, the gaussampling developers'
version = '1'
release = '1'

exclude_patterns = []
show_authors = False
pygments_style = 'sphinx'

html_theme = 'haiku'
html_static_path = []
htmlhelp_basename = 'gaussamplingdoc'

man_pages = [
    ('index', 'gaussampling', u'gaussampling Documentation',
     [u'the gaussampling developers'], 1)
]
