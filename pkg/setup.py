import os

from setuptools import setup

ext_modules = []
if os.environ.get("GUCA_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("guca._poly_c", ["src/guca/_poly_c.pyx"])],
            language_level=3,
        )
    except ImportError:
        # no cython available: the pure-python kernel is used at runtime
        ext_modules = []

setup(ext_modules=ext_modules)
