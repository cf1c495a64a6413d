# -*- coding: utf-8 -*-
#
# treebankqa documentation build configuration file
#
# This file is execfile()d with the current directory set to its containing dir.

import sys, os

# If extensions (or modules to document with autodoc) are in another directory,
# add these directories to sys.path here.
sys.path.insert(0, os.path.abspath('..'))
import treebankqa

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.todo', 'sphinx.ext.coverage']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'treebankqa'
copyright = u'2026, treebankqa developers'

# The short X.Y.Z version.
version = "{}.{}.{}".format(*treebankqa.version[:3])
# The full version, including alpha/beta/rc tags.
release = treebankqa.__version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'
autoclass_content = 'class'

# -- Options for HTML output ---------------------------------------------------

html_theme = "sphinx_rtd_theme"
import sphinx_rtd_theme
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
html_static_path = ['_static']
html_show_copyright = True
htmlhelp_basename = 'treebankqadoc'

# -- Options for LaTeX output --------------------------------------------------

latex_documents = [
  ('index', 'treebankqa.tex', u'treebankqa Documentation',
   u'treebankqa developers', 'manual'),
]

# -- Options for manual page output --------------------------------------------

man_pages = [
    ('index', 'treebankqa', u'treebankqa Documentation',
     [u'treebankqa developers'], 1)
]
