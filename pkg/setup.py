"""Build hook for the optional compiled kernel extension.

The package is fully functional as pure Python.  When Cython and a C
compiler are available, the GF(2) bitmask kernels are additionally built
as a C extension; `matsplit._kernels` picks whichever import succeeds.
A failed extension build downgrades to the pure backend instead of
failing the install.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """build_ext that treats compilation failure as a soft error."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # no compiler, missing headers, ...
            print(f"warning: compiled kernels skipped ({exc}); "
                  "falling back to pure-Python kernels")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); "
                  "falling back to pure-Python kernels")


ext_modules = []
cmdclass = {}
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "matsplit._kernels_cy",
                ["src/matsplit/_kernels_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
    cmdclass["build_ext"] = OptionalBuildExt
except ImportError:
    pass

setup(ext_modules=ext_modules, cmdclass=cmdclass)
