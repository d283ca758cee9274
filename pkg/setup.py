# Builds the optional compiled kernel module.  The package works without it
# (a pure-Python twin is selected at import time), so the extension is marked
# optional and any build failure is non-fatal.
#
#   python3 setup.py build_ext --inplace
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "lzero._kernels_cy",
                ["src/lzero/_kernels_cy.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
