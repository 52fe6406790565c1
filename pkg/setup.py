import os

from setuptools import Extension, setup

# The compiled kernel is a twin of agjordan/_kernel_py.py.  Building it is
# optional: without Cython (or with AGJORDAN_PURE=1) the package installs
# pure-Python and _kernel falls back at import time.
ext_modules = []
if os.environ.get("AGJORDAN_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "agjordan._kernel_c",
                    ["src/agjordan/_kernel_c.pyx"],
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
