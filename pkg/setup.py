"""Build hook for the optional compiled kernels.

The Cython extension is built when Cython and a C compiler are available;
otherwise the package installs with its pure-Python kernels only.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("QUADSG_NO_EXTENSION"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/quadsg/polyring/_kernels.pyx"],
            compiler_directives={"language_level": "3"},
            quiet=True,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
