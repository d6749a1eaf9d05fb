"""Build hook: compile the optional fast twin of the word kernels.

The package is pure Python.  At build time we copy src/shifted_crystal/_kernels.py
to _kernels_c.py and cythonize that copy (typed via the augmenting _kernels_c.pxd),
so the compiled module can never drift from the interpreted one.  If Cython or a C
compiler is unavailable the build silently falls back to pure Python; backend.py
selects whichever is importable at runtime.
"""

import shutil
from pathlib import Path

from setuptools import setup

HERE = Path(__file__).parent
SRC = HERE / "src" / "shifted_crystal"


def make_ext_modules():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    twin = SRC / "_kernels_c.py"
    shutil.copyfile(SRC / "_kernels.py", twin)
    try:
        # setuptools wants /-separated paths relative to the setup.py directory
        return cythonize(
            [twin.relative_to(HERE).as_posix()],
            language_level=3,
            compiler_directives={
                "boundscheck": False,
                "wraparound": False,
                "initializedcheck": False,
                "cdivision": True,
            },
        )
    except Exception:
        return []


setup(ext_modules=make_ext_modules())
