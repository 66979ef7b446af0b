"""Builds the optional compiled kernel; the package works without it."""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("IRRSUB_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(["src/irrsub/_kernels.pyx"], quiet=True)

setup(ext_modules=ext_modules)
