"""Build script: compiles the optional polynomial kernel extension.

The package is pure Python with one optional Cython extension,
milnorkit._poly_cy, mirroring milnorkit._poly_py.  If Cython (or a C
compiler) is unavailable the build proceeds without it and the package
falls back to the pure kernel at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/milnorkit/_poly_cy.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
