# Builds the optional compiled search kernel.
#
#   python setup.py build_ext --inplace
#
# The package works without it: edgesym.kernel falls back to the pure-Python
# twin when the extension is missing or EDGESYM_KERNEL=py is set.

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "edgesym._kernel_c",
                sources=["src/edgesym/_kernel_c.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": 3, "boundscheck": False, "wraparound": False},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
