"""Build hook for the optional compiled normal-form kernel.

The package is pure Python except for ``braidquiver._nfcore_c``, a Cython
twin of ``braidquiver._nfcore``. If Cython or a C compiler is unavailable
the build falls back to the pure-Python kernel (selected at import time).
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/braidquiver/_nfcore_c.pyx"],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
