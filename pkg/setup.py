"""Build script for the optional compiled scalar kernel.

The package is fully functional without the extension: hybridhopf.scalar
falls back to the pure-Python kernel when hybridhopf._scalar_cy is missing.
Set HYBRIDHOPF_SKIP_EXT=1 to skip the compilation entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HYBRIDHOPF_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "hybridhopf._scalar_cy",
                    ["src/hybridhopf/_scalar_cy.pyx"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
