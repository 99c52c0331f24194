"""Build script for the optional compiled kernels.

The package works without the extension (a pure NumPy fallback is selected
at import time), so compilation failures are non-fatal.
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
                "cocircular._kernels",
                ["src/cocircular/_kernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
