"""Build hook for the optional compiled merge kernel.

The package is pure Python end to end; the Cython extension is a drop-in
twin of ``prefixcode._kernel_py`` that removes interpreter overhead from the
merge loop.  If Cython or a C compiler is unavailable the install proceeds
without it and the package falls back to the pure kernel at import time.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible; never fail the install over it."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"warning: compiled kernel skipped ({exc}); "
              "prefixcode will use the pure-Python kernel")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension("prefixcode._kernel_cy", ["src/prefixcode/_kernel_cy.pyx"])
    return cythonize(ext, compiler_directives={"language_level": "3"})


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
