import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SLICEGEMM_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "slicegemm._core_cy",
                    ["src/slicegemm/_core_cy.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython available: install the pure-Python core only.
        ext_modules = []

setup(ext_modules=ext_modules)
