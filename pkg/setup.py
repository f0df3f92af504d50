import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; the numpy fallback is used
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "donoghue._ckernels",
                ["src/donoghue/_ckernels.pyx"],
                include_dirs=[np.get_include()],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
