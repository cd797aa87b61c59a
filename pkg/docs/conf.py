# -*- coding: utf-8 -*-
#
# cfgen documentation build configuration file
#
# This file is execfile()d with the current directory set to its
# containing dir.
#
# All configuration values have a default; values that are commented out
# serve to show the default.

import sys
import os

# The library is not installed when the docs are built from a checkout
sys.path.insert(0, os.path.abspath('../src/'))

# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.intersphinx',
    'sphinx.ext.todo',
    'sphinx.ext.coverage',
    'sphinxarg.ext'
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

# General information about the project.
project = u'cfgen'
copyright = u'2024, The cfgen authors'      # pylint: disable=redefined-builtin

def read_version():
    """Read version from $CFGEN_VERSION or cfgen.version, fall back to devel"""
    if "CFGEN_VERSION" in os.environ:
        return os.environ["CFGEN_VERSION"]
    try:
        import cfgen.version
    except ImportError:
        return "devel"
    return cfgen.version.num

# The short X.Y version.
version = read_version()
# The full version, including alpha/beta/rc tags.
release = version

exclude_patterns = ['_build', 'html']

pygments_style = 'sphinx'

# Keep -- in option names
smartquotes = False

# -- Options for HTML output ----------------------------------------------

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'cfgendoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
}

latex_documents = [
  ('index', 'cfgen.tex', u'cfgen Documentation',
   u'The cfgen authors', 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('cli', 'cfgen', u'Continued fractions of generating functions', [u'The cfgen authors'], 1),
]

# -- Options for Texinfo output -------------------------------------------

texinfo_documents = [
  ('index', 'cfgen', u'cfgen Documentation',
   u'The cfgen authors', 'cfgen', 'Continued fractions of generating functions.',
   'Miscellaneous'),
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None)}

on_rtd = os.environ.get('READTHEDOCS', None) == 'True'

if not on_rtd:  # only import and set the theme if we're building docs locally
    import sphinx_rtd_theme
    html_theme = 'sphinx_rtd_theme'
    html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
