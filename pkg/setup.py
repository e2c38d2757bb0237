"""Build the optional compiled enumeration kernel.

The package is pure Python except for one hot loop (the integral-witness
enumeration behind the brute-force index oracle).  If Cython is unavailable
the extension is skipped and the pure-Python twin is used at runtime.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "foliadex._kernels._oracle",
                sources=["src/foliadex/_kernels/_oracle.pyx"],
            )
        ],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
