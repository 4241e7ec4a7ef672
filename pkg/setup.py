"""Build script: compiles the Cython kernel core when a toolchain is present.

The package works without the extension (a NumPy fallback is selected at
import time), so a failed extension build is not fatal for source installs.
"""

from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "hkdyn._kernels_cy",
                ["src/hkdyn/_kernels_cy.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
