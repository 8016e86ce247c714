"""Build script: compiles the optional C accelerator for the hot kernels.

The extension is a twin of bcinv._kernels_py; the package works without it
(pure-Python fallback is selected at import time).  Build in place with:

    python setup.py build_ext --inplace
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    # A failed compile must not break installation: the pure path covers it.
    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            print(f"bcinv: skipping C accelerator ({exc}); pure Python kernels will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"bcinv: skipping {ext.name} ({exc}); pure Python kernels will be used")


def extensions():
    import os

    if not os.path.exists("src/bcinv/_core.pyx"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [Extension("bcinv._core", ["src/bcinv/_core.pyx"])],
        compiler_directives={
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "language_level": "3",
        },
    )


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
