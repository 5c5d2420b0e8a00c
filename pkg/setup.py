"""Build script: compiles the optional C speedup kernel.

The package works without the extension (a pure-Python fallback is selected
at import time), so compilation failures only cost performance.
"""
import sys

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "boardkit._speedups",
                ["src/boardkit/_speedups.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-env dependent
    sys.stderr.write(f"boardkit: skipping C kernel build ({exc}); pure-Python fallback will be used\n")

setup(ext_modules=ext_modules)
