"""Build script for the optional compiled solver kernel.

The package works without the extension: wythoff._kernel falls back to the
pure-Python solver when the compiled module is missing.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "wythoff._solver_cy",
                ["src/wythoff/_solver_cy.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
