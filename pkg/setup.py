"""Build script for the optional Cython kernels.

The package works without them (see ``qsupercong._kernels``); a failed build
only costs speed.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("QSUPERCONG_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("qsupercong._kernels._ckernels",
                       ["src/qsupercong/_kernels/_ckernels.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": 3},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
