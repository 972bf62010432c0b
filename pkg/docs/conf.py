# -*- coding: utf-8 -*-
#
# qmlab documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.
#
# All configuration values have a default; values that are commented out
# serve to show the default.

import os
import sys

import sphinx_rtd_theme

sys.path.insert(0, os.path.abspath('..'))

import qmlab

# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.doctest',
              'sphinx.ext.mathjax',
              'sphinx.ext.viewcode',
              'sphinx.ext.autodoc',
              'sphinxcontrib.bibtex',
              'sphinx.ext.intersphinx']

bibtex_bibfiles = ['refs.bib']

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
}

templates_path = ['_templates']

source_suffix = '.rst'

# The master toctree document.
master_doc = 'index'

# General information about the project.
project = u'qmlab'
copyright = u'2026, qmlab contributors'
author = u'qmlab contributors'

# The short X.Y version.
version = qmlab.__version__[:-2]
# The full version, including alpha/beta/rc tags.
release = qmlab.__version__

language = 'en'

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

# If true, `todo` and `todoList` produce output, else they produce nothing.
todo_include_todos = False
add_module_names = False


# -- Options for HTML output ----------------------------------------------

html_theme = "sphinx_rtd_theme"
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]

html_theme_options = {
    'collapse_navigation': False,
}

# Output file base name for HTML help builder.
htmlhelp_basename = 'qmlabdoc'


# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}

latex_documents = [
    (master_doc, 'qmlab.tex', u'qmlab Documentation',
     u'qmlab contributors', 'manual'),
]


# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'qmlab', u'qmlab Documentation',
     [author], 1)
]
