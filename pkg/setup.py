import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SL2QUOT_NO_EXT", "") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("sl2quot._kernels._ckernels", ["src/sl2quot/_kernels/_ckernels.pyx"], language="c++")],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
