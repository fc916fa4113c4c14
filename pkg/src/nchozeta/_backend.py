"""Kernel backend selection.

The hot inner loops (hypergeometric term recurrences, the AGM) ship in two
forms: numba @njit-compiled scalar loops and pure-numpy equivalents.  The
environment variable NCHOZETA_BACKEND picks one:

    NCHOZETA_BACKEND=auto    use numba when importable (default)
    NCHOZETA_BACKEND=numba   require numba, fall back with a warning
    NCHOZETA_BACKEND=numpy   force the pure-numpy path

Both backends implement identical algorithms; results agree to rounding
noise.  The selection is made once at import time.
"""

import os
import warnings

_CHOICES = ("auto", "numba", "numpy")


def _select() -> bool:
    raw = os.environ.get("NCHOZETA_BACKEND", "auto").strip().lower() or "auto"
    if raw not in _CHOICES:
        raise ValueError(
            f"NCHOZETA_BACKEND must be one of {_CHOICES}, got {raw!r}"
        )
    if raw == "numpy":
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        if raw == "numba":
            warnings.warn(
                "NCHOZETA_BACKEND=numba but numba is not importable; "
                "using the pure-numpy kernels",
                RuntimeWarning,
                stacklevel=2,
            )
        return False
    return True


USING_NUMBA = _select()
BACKEND = "numba" if USING_NUMBA else "numpy"

if USING_NUMBA:
    from numba import njit

    def jit_kernel(func):
        return njit(cache=True)(func)
else:
    def jit_kernel(func):
        return func
