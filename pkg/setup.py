"""Build script: compiles the optional Jacobi kernel extension.

The package works without the extension (a numpy-backed fallback is
selected at import time), so a failed compile only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "orthomat._kernels._jacobi",
                ["src/orthomat/_kernels/_jacobi.pyx"],
                extra_compile_args=["-O3", "-fcx-limited-range"],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
