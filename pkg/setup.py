"""Build script: compiles the optional Cython kernel.

The package works without the extension (a pure-Python kernel with the same
interface is selected at import time), so any failure here downgrades to a
warning instead of aborting the install.
"""

import warnings

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "qschub._kernels.cyk",
                ["src/qschub/_kernels/cyk.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - exercised only on broken toolchains
    warnings.warn(f"Cython kernel not built ({exc}); using pure-Python kernel")

setup(ext_modules=ext_modules)
