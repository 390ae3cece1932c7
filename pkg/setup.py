import os

from setuptools import setup

ext_modules = []
if os.environ.get("FALPHA_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/falpha/_kernels.pyx"], language_level=3
        )
    except Exception:
        # the pure-Python kernels take over when the extension is missing
        ext_modules = []

setup(ext_modules=ext_modules)
