# Configuration file for the Sphinx documentation builder.
#
# Only the options this project sets; see
# http://www.sphinx-doc.org/en/master/config for the rest.

import os
import os.path as osp
import re
import sys

sys.path.insert(0, osp.abspath(osp.join(os.pardir, os.pardir)))

from toric import __version__


project = 'toric'
copyright = '2026, toric contributors'
author = 'toric contributors'

# The short X.Y version and the full release string
version = re.match(r"\d+\.\d+", __version__).group()
release = __version__

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.intersphinx',
]

master_doc = 'index'
html_theme = 'sphinx_rtd_theme'

# Substitutions used in the docstrings
rst_epilog = """
.. |int| replace:: :class:`int`
.. |list| replace:: :class:`list`
.. |tuple| replace:: :class:`tuple`
.. |dict| replace:: :obj:`dict`
.. |None| replace:: :obj:`None`
.. |Fraction| replace:: :class:`~fractions.Fraction`

.. |license_txt| replace:: LICENSE.txt
.. _license_txt: LICENSE.txt

"""

doctest_global_setup = "import toric"

intersphinx_mapping = {
    'python': ('https://docs.python.org/3/', None),
    'sympy': ('https://docs.sympy.org/latest/', None),
    'networkx': ('https://networkx.org/documentation/stable/', None),
}
