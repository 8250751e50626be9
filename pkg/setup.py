"""Build script for the optional compiled kernel.

The package works without the extension (a pure-Python kernel is selected
at import time), so a failed native build downgrades to a warning instead
of aborting the install.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the Cython kernel, but never make it a hard requirement."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler or toolchain missing
            sys.stderr.write(
                "warning: compiled kernel build failed (%s); "
                "falling back to the pure-Python kernel\n" % exc
            )

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            sys.stderr.write(
                "warning: building %s failed (%s); "
                "falling back to the pure-Python kernel\n" % (ext.name, exc)
            )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        sys.stderr.write("warning: Cython not available, skipping compiled kernel\n")
        return []
    ext = Extension(
        "tuplezero._ckern",
        sources=["src/tuplezero/_ckern.pyx"],
        extra_compile_args=["-O3"],
        language="c",
    )
    return cythonize([ext], language_level=3, annotate=False)


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": OptionalBuildExt},
)
