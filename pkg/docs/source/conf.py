#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# quiverhecke documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys

sys.path.insert(0, os.path.abspath("../../"))

# -- General configuration ------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "sphinx.ext.todo",
    "sphinx.ext.coverage",
    "sphinx.ext.imgmath",
    "sphinx.ext.viewcode",
]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

project = "quiverhecke"
copyright = "2026, the quiverhecke developers"
author = "the quiverhecke developers"

from __about__ import __version__

version = __version__
release = __version__

language = None
exclude_patterns = []
add_function_parentheses = True
add_module_names = True
pygments_style = "sphinx"
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = "furo"
html_last_updated_fmt = "%b %d, %Y"
html_search_language = "en"
html_search_options = {"type": "default"}
htmlhelp_basename = "quiverheckedoc"

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
    "papersize": "letterpaper",
    "pointsize": "10pt",
}
latex_documents = [(master_doc, "quiverhecke.tex", "quiverhecke Documentation", author, "manual")]

# -- Options for manual page output ---------------------------------------

man_pages = [(master_doc, "quiverhecke", "quiverhecke Documentation", [author], 1)]

intersphinx_mapping = {
    "python": ("https://docs.python.org/3/", None),
    "sympy": ("https://docs.sympy.org/latest/", None),
}

# autodoc config
autodoc_member_order = "bysource"
autodoc_typehints = "none"
