#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# revtori documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os
import sphinx_rtd_theme
import datetime
from unittest.mock import MagicMock

# Mock modules for readthedocs
if os.environ.get('READTHEDOCS', None) == 'True':
    class Mock(MagicMock):
        @classmethod
        def __getattr__(cls, name):  return MagicMock()

    mock_modules = ['numpy', 'scipy', 'scipy.optimize', 'pandas']
    sys.modules.update((mod_name, Mock()) for mod_name in mock_modules)

# Add package root and commandline tools to sys.path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), os.pardir)))
script_path = os.path.abspath(os.path.join(os.path.dirname(__file__), os.pardir, 'bin'))
sys.path.append(script_path)

# Revtori imports
import revtori.Version

# -- General configuration ------------------------------------------------

needs_sphinx = '1.6'
extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.imgmath',
              'sphinx.ext.intersphinx',
              'sphinx.ext.napoleon',
              'sphinx.ext.todo',
              'sphinxcontrib.autoprogram',
              'sphinx_rtd_theme']
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

# General information about the project.
project = 'revtori'
copyright = 'Revtori Developers, ' + str(datetime.datetime.now().year)
version = revtori.Version.__version__
release = '%s-%s' % (revtori.Version.__version__, revtori.Version.__date__)
exclude_patterns = ['_build']
highlight_language = 'bash'
pygments_style = 'vs'
todo_include_todos = True

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
htmlhelp_basename = 'revtoridoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}
latex_documents = [('index', 'revtori.tex', 'revtori Documentation', 'Revtori Developers', 'manual')]

# -- Options for manual page output ---------------------------------------

man_pages = [('index', 'revtori', 'revtori Documentation', ['Revtori Developers'], 1)]

# -- Extension configuration ----------------------------------------------

intersphinx_mapping = {'python': ('https://docs.python.org/3', None),
                       'numpy': ('https://numpy.org/doc/stable', None),
                       'pandas': ('https://pandas.pydata.org/docs', None)}

# Napoleon settings
napoleon_google_docstring = True
napoleon_numpy_docstring = True
napoleon_include_private_with_doc = False
napoleon_include_special_with_doc = True
napoleon_use_admonition_for_examples = False
napoleon_use_admonition_for_notes = False
napoleon_use_admonition_for_references = False
napoleon_use_ivar = False
napoleon_use_param = True
napoleon_use_rtype = True
