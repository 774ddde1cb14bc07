"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a pure-Python
twin is selected at import); the build therefore degrades gracefully
when Cython or a C compiler is unavailable.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/weberosc/_kernels.pyx",
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
