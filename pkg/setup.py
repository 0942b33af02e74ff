from setuptools import Extension, setup

import numpy as np
from Cython.Build import cythonize

ext_modules = [
    Extension(
        "rigs._kernels._core",
        sources=["src/rigs/_kernels/_core.pyx"],
        include_dirs=[np.get_include()],
        language="c++",
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
]

setup(ext_modules=cythonize(ext_modules, language_level="3"))
