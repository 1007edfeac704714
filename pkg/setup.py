"""Build script: compiles the optional bitmask kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time), so any failure to cythonize or compile is non-fatal.
Set ARGENT_NO_EXT=1 to skip the extension build entirely.
"""

import os

from setuptools import setup


def _extensions():
    if os.environ.get("ARGENT_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        return []
    return cythonize(
        [Extension("argent._stablec", ["src/argent/_stablec.pyx"])],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=_extensions())
