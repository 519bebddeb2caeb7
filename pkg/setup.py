"""Build script for the optional compiled kernel extension.

The package works without the extension (a NumPy fallback is selected at
import time), so the extension is marked optional: a missing compiler
degrades the install instead of failing it.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "momqmc._kernels_cy",
                ["src/momqmc/_kernels_cy.pyx"],
                # -ffp-contract=off keeps the C arithmetic bit-compatible with
                # the interpreter (no FMA contraction), so the compiled and
                # pure-Python paths agree as closely as libm allows.
                extra_compile_args=["-O3", "-ffp-contract=off"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
