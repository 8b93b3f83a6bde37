"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a NumPy fallback is selected at
import time), so any failure to cythonize or compile is demoted to a
warning rather than aborting the install.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "dopplerlab._kernels._native",
                sources=["src/dopplerlab/_kernels/_native.pyx"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except Exception as exc:  # pragma: no cover - exercised only on broken toolchains
    print(f"warning: skipping native kernel build ({exc}); "
          "pure-Python kernels will be used", file=sys.stderr)
    ext_modules = []

setup(ext_modules=ext_modules)
