"""Build script for the optional compiled term kernel.

The package is pure Python plus one Cython extension holding the sparse
polynomial inner loops.  If Cython (or a C compiler) is unavailable, or
COMPDET_NO_EXT=1 is set, the build falls through to the pure-Python kernel
and the package still works; backend selection happens at import time in
compdet._backend.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("COMPDET_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/compdet/_termkernel.pyx"],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
