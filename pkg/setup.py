"""Build script: compiles the kernel extension when a toolchain is present.

The package is fully functional without the extension (the pure-Python
kernels are selected at import time), so any failure here downgrades to a
warning instead of breaking the install.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain, ...
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(
            f"warning: building the speedup extension failed ({exc}); "
            "falling back to the pure-Python kernels",
            file=sys.stderr,
        )


extension = Extension(
    "bitype.kernels._speedups",
    sources=["src/bitype/kernels/_speedups.pyx"],
)

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [extension],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("warning: Cython not available; installing pure-Python kernels only", file=sys.stderr)
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
