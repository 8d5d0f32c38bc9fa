from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/regionselect/gf2/_gf2core.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # The package works without the extension; gf2 falls back to the
    # pure-Python kernels at import time.
    pass

setup(ext_modules=ext_modules)
