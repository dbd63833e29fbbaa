"""Builds the optional Cython kernels; the package falls back to pure Python
when the extension cannot be compiled."""
import os

from setuptools import setup

ext_modules = []
if os.environ.get("CIRCBOOK_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("circbook._ckernels", ["src/circbook/_ckernels.pyx"], extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
