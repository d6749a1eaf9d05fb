"""Kernel backend selection.

The compiled twin _kernels_c (cythonized copy of _kernels) is preferred when it
imports; set SHIFTED_CRYSTAL_BACKEND=py or =c to force one side.  Both expose
the same functions, so the rest of the package imports them from here.
"""

import os

_forced = os.environ.get("SHIFTED_CRYSTAL_BACKEND", "").strip().lower()

if _forced == "py":
    from . import _kernels as kernels
elif _forced == "c":
    from . import _kernels_c as kernels  # type: ignore[no-redef]
else:
    try:
        from . import _kernels_c as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels as kernels  # type: ignore[no-redef]


def backend_name():
    """'c' when the compiled kernels are active, else 'py'."""
    return "c" if kernels.__name__.endswith("_c") else "py"


canonicalize = kernels.canonicalize
weight = kernels.weight
standardize = kernels.standardize
destandardize = kernels.destandardize
representatives = kernels.representatives
restrict = kernels.restrict
walk_endpoint = kernels.walk_endpoint
walk_points = kernels.walk_points
f_prime = kernels.f_prime
e_prime = kernels.e_prime
critical_f = kernels.critical_f
critical_e = kernels.critical_e
transform_f = kernels.transform_f
apply_f = kernels.apply_f
apply_e = kernels.apply_e
flip = kernels.flip
is_ballot = kernels.is_ballot
