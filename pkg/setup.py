import numpy
from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/numrad/_gridkern.pyx",
        compiler_directives=dict(
            language_level="3",
            boundscheck=False,
            wraparound=False,
            cdivision=True,
        ),
    )
except ImportError:
    # The package runs on the numpy fallback kernels if Cython is unavailable.
    ext_modules = []

setup(ext_modules=ext_modules, include_dirs=[numpy.get_include()])
