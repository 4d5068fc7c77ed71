"""Build script for the optional compiled kernel extension.

The package is pure Python apart from seqident._kernels, a Cython twin of
seqident._kernels_py.  The extension is marked optional: if Cython or a C
compiler is unavailable the install still succeeds and the package falls
back to the pure-Python kernels at import time.
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
                "seqident._kernels",
                ["src/seqident/_kernels.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
