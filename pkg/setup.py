"""Builds the optional compiled kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time), so a failed compile only costs speed.
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/spincas/_kernels_cy.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"spincas: skipping compiled kernels ({exc!r})")

setup(ext_modules=ext_modules)
