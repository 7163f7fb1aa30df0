# Configuration file for the Sphinx documentation builder.
#
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

# -- Project information -----------------------------------------------------

project = 'pyRRSet'
copyright = '2026, pyRRSet developers'
author = 'pyRRSet developers'
release = '1.0.0'

# -- General configuration ---------------------------------------------------

# The numerical stack is not needed to render the API reference
autodoc_mock_imports = [
    'numpy',
    'sympy',
    'networkx',
    'matplotlib'
]
autodoc_member_order = 'bysource'

needs_sphinx = '1.3'  # for napoleon

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
]

napoleon_google_docstring = True
napoleon_numpy_docstring = False
napoleon_include_private_with_doc = False
napoleon_include_special_with_doc = False
napoleon_use_param = False
napoleon_use_rtype = False

source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'collapse_navigation': False,
}
