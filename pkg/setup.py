"""Build hook for the optional Cython extension.

The package is fully functional without it (see pseudoseer._kernels);
set PSEUDOSEER_NO_EXT=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("PSEUDOSEER_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "pseudoseer._kernels._speedups",
                    ["src/pseudoseer/_kernels/_speedups.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
