"""Build script.

The exact-arithmetic inner loops (monomial merges, polynomial products)
live in ``incekit.expr._backend``.  When Cython and a C compiler are
available we compile the accelerated twin ``_ops_cy``; otherwise the
pure-Python implementation is used and the package stays fully functional.
Set ``INCEKIT_NO_EXT=1`` to skip the extension build explicitly.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("INCEKIT_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/incekit/expr/_backend/_ops_cy.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
