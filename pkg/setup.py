"""Build script: compiles the optional Cython kernel.

The package is fully functional without the extension (a NumPy fallback
is selected at import time), so any failure here is non-fatal: we just
ship the pure-Python wheel.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "eechain._kernels",
                ["src/eechain/_kernels.pyx"],
                extra_compile_args=["-O3"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"eechain: skipping compiled kernel ({exc}); using NumPy fallback")

setup(ext_modules=ext_modules)
